use std::fs::File;

use gqd_core::confinement::{brus_gap, charging_energy, surface_to_volume, BrusParams};
use gqd_core::dirac::{
    dirac_levels, dirac_roots, radial_spinor, Band, DiracLevel, DiracSettings, DotGeometry,
};
use gqd_core::landau::{blockade_visible, landau_energy, staircase_iv, LandauParams};
use gqd_core::special::bessel_j;
use gqd_core::tight_binding::{build_lattice, gap_samples, tb_spectrum};
use gqd_core::{defaults, Error, PhysicalConstants};

use crate::args::*;
use crate::output::{write_csv, Cell, Output, Table};
use crate::CliError;

const AF: f64 = 1e-18;

pub fn dispatch(command: &Command, consts: &PhysicalConstants) -> Result<Output, CliError> {
    match command {
        Command::Spectrum(SpectrumCommand::Dirac(a)) => spectrum_dirac(a, consts),
        Command::Spectrum(SpectrumCommand::Tb(a)) => spectrum_tb(a, consts),
        Command::GapVsSize(a) => gap_vs_size(a, consts),
        Command::Wavefunction(a) => wavefunction(a, consts),
        Command::Lattice(a) => lattice(a, consts),
        Command::Landau(a) => landau(a, consts),
        Command::IvStaircase(a) => iv_staircase(a, consts),
        Command::Brus(a) => brus(a, consts),
        Command::SvRatio(a) => sv_ratio(a),
        Command::ChargingEnergy(a) => charging(a, consts),
        Command::BlockadeCheck(a) => blockade(a, consts),
        Command::Bessel(a) => bessel(a),
    }
}

fn spectrum_dirac(a: &DiracArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let geom = DotGeometry::new(a.radius_nm)?;
    let settings = DiracSettings {
        m_min: a.m_min,
        m_max: a.m_max,
        n_max: a.n_max,
        valleys: a.valleys.valleys(),
        scan_step: a.scan_step,
    };
    let levels = dirac_levels(&geom, &settings, consts)?;
    let mut t = Table::new(vec!["tau", "m", "n", "xi", "energy_ev"]);
    for l in levels {
        t.push(vec![
            l.tau().into(),
            l.m.into(),
            l.n.into(),
            l.xi.into(),
            l.energy.into(),
        ]);
    }
    Ok(Output::Table(t))
}

fn spectrum_tb(a: &TbArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let spec = tb_spectrum(a.radius_nm, a.center.into(), consts)?;
    log::info!(
        "{} sites, half-filling gap {} eV",
        spec.n_sites.unwrap_or(0),
        spec.gap
    );
    let mut t = Table::new(vec!["index", "eigenvalue_ev"]);
    for (i, v) in spec.eigenvalues.iter().enumerate() {
        t.push(vec![i.into(), (*v).into()]);
    }
    Ok(Output::Table(t))
}

fn gap_vs_size(a: &GapVsSizeArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let samples = gap_samples(&a.radii, a.center.into(), consts)?;
    let mut t = Table::new(vec!["radius_nm", "n_sites", "gap_ev"]);
    for s in samples {
        t.push(vec![s.radius_nm.into(), s.n_sites.into(), s.gap_ev.into()]);
    }
    Ok(Output::Table(t))
}

fn wavefunction(a: &WavefunctionArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let geom = DotGeometry::new(a.radius_nm)?;
    let n = a.n as usize;
    let xi = dirac_roots(a.tau, a.m, n, defaults::SCAN_STEP)?[n - 1];
    let band: Band = a.band.into();
    let level = DiracLevel {
        valley: a.tau,
        m: a.m,
        n,
        xi,
        energy: band.sign() * consts.hbar_vf_over_r(geom.radius())? * xi,
        band,
    };
    let spinor = radial_spinor(&level, &geom, a.samples)?;
    if spinor.boundary_residual.is_none() {
        log::warn!("chi_A vanishes at the edge; boundary ratio not checked");
    }
    let mut t = Table::new(vec!["r_nm", "chi_a", "chi_b"]);
    for s in &spinor.samples {
        t.push(vec![s.r.into(), s.chi_a.into(), s.chi_b.into()]);
    }
    Ok(Output::Table(t))
}

fn lattice(a: &LatticeArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let lat = build_lattice(a.radius_nm, a.center.into(), consts)?;
    if let Some(path) = &a.bonds {
        let mut bonds = Table::new(vec!["i", "j"]);
        for &(i, j) in &lat.bonds {
            bonds.push(vec![i.into(), j.into()]);
        }
        let mut file = File::create(path).map_err(CliError::file(path))?;
        write_csv(&bonds, &mut file)?;
    }
    let mut t = Table::new(vec!["x_nm", "y_nm", "sublattice"]);
    for s in &lat.sites {
        t.push(vec![
            s.x.into(),
            s.y.into(),
            s.sublattice.to_string().into(),
        ]);
    }
    Ok(Output::Table(t))
}

fn landau(a: &LandauArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let mut t = Table::new(vec!["n", "m", "energy_ev"]);
    let m_max = i32::try_from(a.m_max).map_err(|_| Error::Domain("m_max too large".into()))?;
    for n in 0..=a.n_max {
        for m in -m_max..=m_max {
            let p = LandauParams {
                b_field: a.b_tesla,
                n,
                m,
            };
            let e = landau_energy(&p, a.units.into(), consts)?;
            t.push(vec![n.into(), m.into(), e.into()]);
        }
    }
    Ok(Output::Table(t))
}

fn iv_staircase(a: &IvArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let curve = staircase_iv(a.capacitance_af * AF, a.v_max, a.samples, consts)?;
    let mut headers = vec!["voltage_v", "current_steps"];
    if a.step_current.is_some() {
        headers.push("current_a");
    }
    let mut t = Table::new(headers);
    for p in &curve.points {
        let mut row: Vec<Cell> = vec![p.voltage.into(), p.current.into()];
        if let Some(scale) = a.step_current {
            row.push((p.current * scale).into());
        }
        t.push(row);
    }
    Ok(Output::Table(t))
}

/// One value or a sweep over it.
fn points(single: Option<f64>, sweep: Option<Sweep>) -> (Vec<f64>, bool) {
    match (single, sweep) {
        (_, Some(s)) => (s.values(), true),
        (Some(v), None) => (vec![v], false),
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

fn wrap(t: Table, sweep: bool) -> Output {
    if sweep {
        Output::Table(t)
    } else {
        Output::Record(t)
    }
}

fn brus(a: &BrusArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let (radii, sweep) = points(a.radius_nm, a.sweep);
    let mut t = Table::new(vec!["radius_nm", "gap_ev"]);
    for radius in radii {
        let p = BrusParams {
            e_gap_bulk: a.e_gap_ev,
            m_e_eff: a.me,
            m_h_eff: a.mh,
            radius,
        };
        t.push(vec![radius.into(), brus_gap(&p, consts)?.into()]);
    }
    Ok(wrap(t, sweep))
}

fn sv_ratio(a: &SvArgs) -> Result<Output, CliError> {
    let (diameters, sweep) = points(a.diameter_m, a.sweep);
    let mut t = Table::new(vec!["diameter_m", "sv_ratio_per_m"]);
    for d in diameters {
        t.push(vec![d.into(), surface_to_volume(d)?.into()]);
    }
    Ok(wrap(t, sweep))
}

fn charging(a: &ChargingArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let (caps, sweep) = points(a.capacitance_af, a.sweep);
    let mut t = Table::new(vec!["capacitance_af", "charging_energy_ev"]);
    for c in caps {
        t.push(vec![c.into(), charging_energy(c * AF, consts)?.into()]);
    }
    Ok(wrap(t, sweep))
}

fn blockade(a: &BlockadeArgs, consts: &PhysicalConstants) -> Result<Output, CliError> {
    let check = blockade_visible(
        a.capacitance_af * AF,
        a.temperature_k,
        a.visibility_factor,
        consts,
    )?;
    let mut t = Table::new(vec![
        "capacitance_af",
        "temperature_k",
        "charging_energy_ev",
        "thermal_energy_ev",
        "ratio",
        "visibility_factor",
        "visible",
    ]);
    t.push(vec![
        a.capacitance_af.into(),
        a.temperature_k.into(),
        check.charging_energy.into(),
        check.thermal_energy.into(),
        check.ratio.into(),
        a.visibility_factor.into(),
        check.visible.into(),
    ]);
    Ok(Output::Record(t))
}

fn bessel(a: &BesselArgs) -> Result<Output, CliError> {
    let mut t = Table::new(vec!["m", "x", "j"]);
    t.push(vec![a.m.into(), a.x.into(), bessel_j(a.m, a.x)?.into()]);
    Ok(Output::Record(t))
}
