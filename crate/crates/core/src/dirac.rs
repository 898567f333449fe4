//! Continuum Dirac model of a circular dot with an infinite-mass edge.
//!
//! Inside the dot the sublattice amplitudes are `χ_A = J_m(kr)` and
//! `χ_B = ±J_{m+1}(kr)`. The edge condition leaves one transcendental
//! equation per valley:
//!
//! * K  (τ = +1): `J_m(ξ) + J_{m+1}(ξ) = 0`
//! * K′ (τ = −1): `J_m(ξ) − J_{m+1}(ξ) = 0`
//!
//! and each positive root gives the pair of levels `E = ±ħ v_F ξ / R`.
//!
//! The lowest m = 0 roots are ξ ≈ 1.4347 (K′) and ξ ≈ 3.1129 (K). An often
//! quoted "ξ ≈ 2.48" for the lowest m = 0 level matches neither equation and
//! is not used anywhere here.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::defaults;
use crate::error::{require_positive, Error, Result};
use crate::special::{bessel_j, find_roots};

/// Roots closer to zero than this are the trivial ξ = 0 solution.
const ZERO_ROOT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Valley {
    K,
    KPrime,
}

impl Valley {
    pub const BOTH: [Valley; 2] = [Valley::K, Valley::KPrime];

    pub fn tau(self) -> i32 {
        match self {
            Valley::K => 1,
            Valley::KPrime => -1,
        }
    }

    pub fn from_tau(tau: i32) -> Result<Self> {
        match tau {
            1 => Ok(Valley::K),
            -1 => Ok(Valley::KPrime),
            other => Err(Error::domain(format!(
                "valley index must be +1 or -1, got {other}"
            ))),
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Valley::K => Valley::KPrime,
            Valley::KPrime => Valley::K,
        }
    }
}

impl fmt::Display for Valley {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Valley::K => "K",
            Valley::KPrime => "Kprime",
        })
    }
}

impl FromStr for Valley {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" | "k" | "+1" | "1" => Ok(Valley::K),
            "Kprime" | "kprime" | "K'" | "-1" => Ok(Valley::KPrime),
            other => Err(Error::domain(format!("unknown valley {other:?}"))),
        }
    }
}

/// A circular dot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DotGeometry {
    radius: f64,
}

impl DotGeometry {
    pub fn new(radius_nm: f64) -> Result<Self> {
        let radius = require_positive(radius_nm, "dot radius")?;
        let (lo, hi) = defaults::PRACTICAL_RADIUS_NM;
        if !(lo..=hi).contains(&radius) {
            log::warn!("dot radius {radius} nm is outside the usual {lo}-{hi} nm range");
        }
        Ok(DotGeometry { radius })
    }

    /// Radius in nm.
    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// Which branch of `E = ±ħ v_F ξ / R` a level sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Band {
    Valence,
    Conduction,
}

impl Band {
    pub fn sign(self) -> f64 {
        match self {
            Band::Valence => -1.0,
            Band::Conduction => 1.0,
        }
    }
}

/// The boundary equation `J_m(ξ) + τ J_{m+1}(ξ)` whose positive roots fix
/// the spectrum of one (valley, m) channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryFunction {
    pub valley: Valley,
    pub m: i32,
}

impl BoundaryFunction {
    pub fn new(valley: Valley, m: i32) -> Self {
        BoundaryFunction { valley, m }
    }

    /// Value at `xi`; NaN for negative or non-finite `xi`.
    pub fn value(&self, xi: f64) -> f64 {
        match (bessel_j(self.m, xi), bessel_j(self.m + 1, xi)) {
            (Ok(a), Ok(b)) => a + f64::from(self.valley.tau()) * b,
            _ => f64::NAN,
        }
    }
}

/// First `n_max` strictly positive roots of the (valley, m) boundary equation.
///
/// The scan window starts just past the expected position of the last
/// requested root and doubles up to [`defaults::SCAN_CAP`].
pub fn dirac_roots(valley: Valley, m: i32, n_max: usize, scan_step: f64) -> Result<Vec<f64>> {
    if n_max == 0 {
        return Err(Error::domain("need at least one root (n_max >= 1)"));
    }
    let f = BoundaryFunction::new(valley, m);
    let mut window =
        ((n_max as f64 + 0.5 * f64::from(m.unsigned_abs()) + 1.0) * PI).min(defaults::SCAN_CAP);
    loop {
        let mut roots = find_roots(|x| f.value(x), 0.0, window, n_max + 1, scan_step)?;
        roots.retain(|&xi| xi > ZERO_ROOT);
        if roots.len() >= n_max {
            roots.truncate(n_max);
            return Ok(roots);
        }
        if window >= defaults::SCAN_CAP {
            return Err(Error::MissingRoots {
                found: roots.len(),
                requested: n_max,
                window,
            });
        }
        window = (2.0 * window).min(defaults::SCAN_CAP);
    }
}

/// One bound state of the continuum model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiracLevel {
    pub valley: Valley,
    pub m: i32,
    /// Radial index, starting at 1.
    pub n: usize,
    pub xi: f64,
    /// Signed energy in eV.
    pub energy: f64,
    pub band: Band,
}

impl DiracLevel {
    pub fn tau(&self) -> i32 {
        self.valley.tau()
    }

    /// Total angular momentum `j = m + 1/2`.
    pub fn total_angular_momentum(&self) -> f64 {
        f64::from(self.m) + 0.5
    }

    /// Wavenumber `k = |E| / ħ v_F` in 1/nm.
    pub fn wavenumber(&self, consts: &PhysicalConstants) -> f64 {
        self.energy.abs() / consts.hbar_vf_ev_nm()
    }

    fn order_key(&self, other: &Self) -> Ordering {
        self.energy
            .abs()
            .total_cmp(&other.energy.abs())
            .then(other.tau().cmp(&self.tau()))
            .then(self.m.cmp(&other.m))
            .then(self.n.cmp(&other.n))
            .then(self.band.cmp(&other.band))
    }
}

/// Which channels to solve.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSettings {
    pub m_min: i32,
    pub m_max: i32,
    pub n_max: usize,
    pub valleys: Vec<Valley>,
    pub scan_step: f64,
}

impl Default for DiracSettings {
    fn default() -> Self {
        DiracSettings {
            m_min: defaults::M_MIN,
            m_max: defaults::M_MAX,
            n_max: defaults::N_MAX,
            valleys: Valley::BOTH.to_vec(),
            scan_step: defaults::SCAN_STEP,
        }
    }
}

impl DiracSettings {
    fn validate(&self) -> Result<()> {
        if self.m_min > self.m_max {
            return Err(Error::domain(format!(
                "empty angular momentum range [{}, {}]",
                self.m_min, self.m_max
            )));
        }
        if self.n_max == 0 {
            return Err(Error::domain("n_max must be >= 1"));
        }
        if self.valleys.is_empty() {
            return Err(Error::domain("no valleys selected"));
        }
        Ok(())
    }
}

/// All levels of the selected channels, both energy branches, sorted by
/// `|E|` then valley (K first), m, n and band.
pub fn dirac_levels(
    geom: &DotGeometry,
    settings: &DiracSettings,
    consts: &PhysicalConstants,
) -> Result<Vec<DiracLevel>> {
    settings.validate()?;
    let scale = consts.hbar_vf_over_r(geom.radius())?;
    let mut valleys = settings.valleys.clone();
    valleys.sort();
    valleys.dedup();

    let mut levels = Vec::new();
    for valley in valleys {
        for m in settings.m_min..=settings.m_max {
            let roots = dirac_roots(valley, m, settings.n_max, settings.scan_step)?;
            for (idx, xi) in roots.into_iter().enumerate() {
                for band in [Band::Valence, Band::Conduction] {
                    levels.push(DiracLevel {
                        valley,
                        m,
                        n: idx + 1,
                        xi,
                        energy: band.sign() * scale * xi,
                        band,
                    });
                }
            }
        }
    }
    levels.sort_by(DiracLevel::order_key);
    Ok(levels)
}

/// The model gap next to the closed-form `2ħv_F/R` estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiracGap {
    /// `2·min|E|` over the computed levels, eV.
    pub exact: f64,
    /// `2ħv_F/R`, eV.
    pub estimate: f64,
    /// Smallest root; equals `exact / estimate`.
    pub xi_min: f64,
}

pub fn dirac_gap(
    geom: &DotGeometry,
    settings: &DiracSettings,
    consts: &PhysicalConstants,
) -> Result<DiracGap> {
    let levels = dirac_levels(geom, settings, consts)?;
    let lowest = levels
        .first()
        .ok_or_else(|| Error::domain("no levels to take a gap from"))?;
    let estimate = 2.0 * consts.hbar_vf_over_r(geom.radius())?;
    Ok(DiracGap {
        exact: 2.0 * lowest.energy.abs(),
        estimate,
        xi_min: lowest.xi,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinorSample {
    /// nm
    pub r: f64,
    pub chi_a: f64,
    pub chi_b: f64,
}

/// Sampled radial amplitudes of one level, normalized so that
/// `∫ (χ_A² + χ_B²) 2πr dr = 1` over the disk (units of 1/nm).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialSpinor {
    pub level: DiracLevel,
    pub samples: Vec<SpinorSample>,
    /// Prefactor multiplying the Bessel functions.
    pub normalization: f64,
    /// `|χ_B(R)/χ_A(R) − (−τ·s)|`, or `None` when `χ_A(R)` vanishes and the
    /// ratio is undefined.
    pub boundary_residual: Option<f64>,
}

impl RadialSpinor {
    /// Trapezoidal estimate of the norm on the sample grid.
    pub fn grid_norm(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| {
                let g = |s: &SpinorSample| (s.chi_a * s.chi_a + s.chi_b * s.chi_b) * 2.0 * PI * s.r;
                0.5 * (w[1].r - w[0].r) * (g(&w[0]) + g(&w[1]))
            })
            .sum()
    }
}

/// Samples `χ_A(r) = N J_m(ξr/R)` and `χ_B(r) = ±N J_{m+1}(ξr/R)` on a
/// uniform grid over `[0, R]`.
///
/// `N` comes from the closed form
/// `∫₀^R J_ν(kr)² r dr = R²/2 · [J_ν(ξ)² − J_{ν−1}(ξ) J_{ν+1}(ξ)]`,
/// so the grid itself only needs to be fine enough for plotting.
pub fn radial_spinor(
    level: &DiracLevel,
    geom: &DotGeometry,
    n_samples: usize,
) -> Result<RadialSpinor> {
    if n_samples < defaults::MIN_WAVEFUNCTION_SAMPLES {
        return Err(Error::domain(format!(
            "need at least {} samples, got {n_samples}",
            defaults::MIN_WAVEFUNCTION_SAMPLES
        )));
    }
    let xi = require_positive(level.xi, "root xi")?;
    let radius = geom.radius();
    let m = level.m;
    let j = |order: i32, x: f64| bessel_j(order, x);

    let edge =
        |nu: i32| -> Result<f64> { Ok(j(nu, xi)?.powi(2) - j(nu - 1, xi)? * j(nu + 1, xi)?) };
    let radial_integral = 0.5 * radius * radius * (edge(m)? + edge(m + 1)?);
    let normalization = 1.0 / (2.0 * PI * radial_integral).sqrt();
    let sign = level.band.sign();

    let samples = (0..n_samples)
        .map(|i| {
            let r = if i + 1 == n_samples {
                radius
            } else {
                radius * i as f64 / (n_samples - 1) as f64
            };
            let x = xi * r / radius;
            Ok(SpinorSample {
                r,
                chi_a: normalization * j(m, x)?,
                chi_b: sign * normalization * j(m + 1, x)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let last = samples[n_samples - 1];
    let expected = -f64::from(level.tau()) * sign;
    let boundary_residual = if last.chi_a.abs() > 1e-8 * normalization {
        Some((last.chi_b / last.chi_a - expected).abs())
    } else {
        log::warn!("chi_A vanishes at the edge; boundary ratio check skipped");
        None
    };

    Ok(RadialSpinor {
        level: *level,
        samples,
        normalization,
        boundary_residual,
    })
}
