use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use gqd_core::defaults;
use gqd_core::dirac::{Band, Valley};
use gqd_core::landau::LandauUnits;
use gqd_core::tight_binding::LatticeCenter;

use crate::output::Format;

/// Electronic spectra of circular graphene quantum dots and related
/// confinement estimates.
#[derive(Debug, Parser)]
#[command(name = "gqd", version)]
pub struct Cli {
    /// Constants file with `key = value` overrides.
    #[arg(long, global = true, env = "GQD_CONSTANTS", value_name = "PATH")]
    pub constants: Option<PathBuf>,

    /// Write results here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Output format. Tables default to CSV, single values to `name = value` lines.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy spectrum of the continuum or the lattice model.
    #[command(subcommand)]
    Spectrum(SpectrumCommand),
    /// Tight-binding half-filling gap for several radii.
    GapVsSize(GapVsSizeArgs),
    /// Radial spinor of one continuum level.
    Wavefunction(WavefunctionArgs),
    /// Atom positions of a disk-shaped flake.
    Lattice(LatticeArgs),
    /// Bulk Landau levels in a perpendicular field.
    Landau(LandauArgs),
    /// Zero-temperature Coulomb-blockade staircase.
    IvStaircase(IvArgs),
    /// Effective-mass (Brus) band gap.
    Brus(BrusArgs),
    /// Surface-to-volume ratio of a sphere.
    SvRatio(SvArgs),
    /// Single-electron charging energy.
    ChargingEnergy(ChargingArgs),
    /// Whether the blockade survives thermal smearing.
    BlockadeCheck(BlockadeArgs),
    /// Evaluate J_m(x).
    #[command(hide = true, allow_negative_numbers = true)]
    Bessel(BesselArgs),
}

#[derive(Debug, Subcommand)]
pub enum SpectrumCommand {
    /// Infinite-mass Dirac levels.
    #[command(allow_negative_numbers = true)]
    Dirac(DiracArgs),
    /// Nearest-neighbour tight-binding eigenvalues.
    Tb(TbArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ValleyChoice {
    Both,
    #[value(name = "K")]
    K,
    #[value(name = "Kprime")]
    Kprime,
}

impl ValleyChoice {
    pub fn valleys(self) -> Vec<Valley> {
        match self {
            ValleyChoice::Both => Valley::BOTH.to_vec(),
            ValleyChoice::K => vec![Valley::K],
            ValleyChoice::Kprime => vec![Valley::KPrime],
        }
    }
}

#[derive(Debug, Args)]
pub struct DiracArgs {
    #[arg(long, value_name = "R")]
    pub radius_nm: f64,
    #[arg(long, default_value_t = defaults::M_MIN)]
    pub m_min: i32,
    #[arg(long, default_value_t = defaults::M_MAX)]
    pub m_max: i32,
    #[arg(long, default_value_t = defaults::N_MAX)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = ValleyChoice::Both)]
    pub valleys: ValleyChoice,
    /// Root scan spacing in dimensionless units.
    #[arg(long, default_value_t = defaults::SCAN_STEP)]
    pub scan_step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CenterChoice {
    Hexagon,
    Atom,
}

impl From<CenterChoice> for LatticeCenter {
    fn from(c: CenterChoice) -> Self {
        match c {
            CenterChoice::Hexagon => LatticeCenter::Hexagon,
            CenterChoice::Atom => LatticeCenter::Atom,
        }
    }
}

#[derive(Debug, Args)]
pub struct TbArgs {
    #[arg(long, value_name = "R")]
    pub radius_nm: f64,
    #[arg(long, value_enum, default_value_t = CenterChoice::Hexagon)]
    pub center: CenterChoice,
}

#[derive(Debug, Args)]
pub struct GapVsSizeArgs {
    /// Comma-separated radii in nm.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub radii: Vec<f64>,
    #[arg(long, value_enum, default_value_t = CenterChoice::Hexagon)]
    pub center: CenterChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BandChoice {
    Conduction,
    Valence,
}

impl From<BandChoice> for Band {
    fn from(b: BandChoice) -> Self {
        match b {
            BandChoice::Conduction => Band::Conduction,
            BandChoice::Valence => Band::Valence,
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct WavefunctionArgs {
    /// Valley: K, Kprime, +1 or -1.
    #[arg(long, value_parser = parse_valley)]
    pub tau: Valley,
    #[arg(long)]
    pub m: i32,
    /// Radial index, from 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_name = "R")]
    pub radius_nm: f64,
    #[arg(long, default_value_t = defaults::WAVEFUNCTION_SAMPLES)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = BandChoice::Conduction)]
    pub band: BandChoice,
}

fn parse_valley(s: &str) -> Result<Valley, String> {
    Valley::from_str(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[arg(long, value_name = "R")]
    pub radius_nm: f64,
    #[arg(long, value_enum, default_value_t = CenterChoice::Hexagon)]
    pub center: CenterChoice,
    /// Also write the bond list (`i,j`) to this CSV file.
    #[arg(long, value_name = "PATH")]
    pub bonds: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsChoice {
    Si,
    GaussianLiteral,
}

impl From<UnitsChoice> for LandauUnits {
    fn from(u: UnitsChoice) -> Self {
        match u {
            UnitsChoice::Si => LandauUnits::Si,
            UnitsChoice::GaussianLiteral => LandauUnits::GaussianLiteral,
        }
    }
}

#[derive(Debug, Args)]
pub struct LandauArgs {
    #[arg(long, value_name = "B")]
    pub b_tesla: f64,
    #[arg(long, default_value_t = defaults::LANDAU_N_MAX)]
    pub n_max: u32,
    /// Emits m from -m_max to m_max.
    #[arg(long, default_value_t = defaults::LANDAU_M_MAX)]
    pub m_max: u32,
    #[arg(long, value_enum, default_value_t = UnitsChoice::Si)]
    pub units: UnitsChoice,
}

#[derive(Debug, Args)]
pub struct IvArgs {
    #[arg(long, value_name = "C")]
    pub capacitance_af: f64,
    #[arg(long, value_name = "V")]
    pub v_max: f64,
    #[arg(long, value_name = "K")]
    pub samples: usize,
    /// Plateau height in amperes; adds a `current_a` column.
    #[arg(long, value_name = "A")]
    pub step_current: Option<f64>,
}

/// `start:stop:steps` with an optional `:log` suffix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub log: bool,
}

impl Sweep {
    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    return self.stop;
                }
                let frac = i as f64 / last;
                if self.log {
                    (self.start.ln() + frac * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + frac * (self.stop - self.start)
                }
            })
            .collect()
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let log = match parts.as_slice() {
            [_, _, _] => false,
            [_, _, _, "log"] => true,
            [_, _, _, "lin"] => false,
            _ => return Err(format!("expected start:stop:steps[:log], got {s:?}")),
        };
        let num = |p: &str| {
            p.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("{p:?} is not a finite number"))
        };
        let start = num(parts[0])?;
        let stop = num(parts[1])?;
        let steps: usize = parts[2]
            .parse()
            .map_err(|_| format!("{:?} is not a step count", parts[2]))?;
        if steps < 1 {
            return Err("steps must be >= 1".into());
        }
        if start.is_nan() || stop.is_nan() || start >= stop {
            return Err(format!("sweep needs start < stop, got {start} and {stop}"));
        }
        if log && start <= 0.0 {
            return Err("log sweeps need start > 0".into());
        }
        Ok(Sweep {
            start,
            stop,
            steps,
            log,
        })
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["radius_nm", "sweep"])))]
pub struct BrusArgs {
    /// Bulk band gap in eV.
    #[arg(long)]
    pub e_gap_ev: f64,
    /// Electron effective mass in units of m0.
    #[arg(long)]
    pub me: f64,
    /// Hole effective mass in units of m0.
    #[arg(long)]
    pub mh: f64,
    #[arg(long, value_name = "R")]
    pub radius_nm: Option<f64>,
    /// Radius sweep in nm.
    #[arg(long)]
    pub sweep: Option<Sweep>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["diameter_m", "sweep"])))]
pub struct SvArgs {
    #[arg(long, value_name = "D")]
    pub diameter_m: Option<f64>,
    /// Diameter sweep in m.
    #[arg(long)]
    pub sweep: Option<Sweep>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("cap").required(true).args(["capacitance_af", "sweep"])))]
pub struct ChargingArgs {
    #[arg(long, value_name = "C")]
    pub capacitance_af: Option<f64>,
    /// Capacitance sweep in aF.
    #[arg(long)]
    pub sweep: Option<Sweep>,
}

#[derive(Debug, Args)]
pub struct BlockadeArgs {
    #[arg(long, value_name = "C")]
    pub capacitance_af: f64,
    #[arg(long, value_name = "T")]
    pub temperature_k: f64,
    #[arg(long, default_value_t = defaults::VISIBILITY_FACTOR)]
    pub visibility_factor: f64,
}

#[derive(Debug, Args)]
pub struct BesselArgs {
    #[arg(long)]
    pub m: i32,
    #[arg(long)]
    pub x: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        let s: Sweep = "1:3:3".parse().unwrap();
        assert_eq!(s.values(), vec![1.0, 2.0, 3.0]);
        let s: Sweep = "1:100:3:log".parse().unwrap();
        let v = s.values();
        assert!((v[1] - 10.0).abs() < 1e-12 && v[2] == 100.0);
        assert_eq!("2:5:1".parse::<Sweep>().unwrap().values(), vec![2.0]);
        assert!("3:1:4".parse::<Sweep>().is_err());
        assert!("1:2:0".parse::<Sweep>().is_err());
        assert!("1:2".parse::<Sweep>().is_err());
        assert!("0:2:3:log".parse::<Sweep>().is_err());
        assert!("a:2:3".parse::<Sweep>().is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
