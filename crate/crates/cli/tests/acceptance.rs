//! End-to-end acceptance checks, one verdict line per criterion.

#![allow(clippy::excessive_precision)]

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gqd_core::confinement::{
    brus_gap, capacitance_for_charging_energy, charging_energy, surface_to_volume, BrusParams,
};
use gqd_core::dirac::{
    dirac_gap, dirac_levels, dirac_roots, BoundaryFunction, DiracSettings, DotGeometry, Valley,
};
use gqd_core::landau::{
    blockade_visible, landau_energy, staircase_current, staircase_iv, LandauParams, LandauUnits,
};
use gqd_core::special::bessel_j;
use gqd_core::tight_binding::{
    build_lattice, fit_gap_scaling, lattice_spectrum, LatticeCenter, Spectrum,
};
use gqd_core::PhysicalConstants;

use common::*;

const RADII_NM: [f64; 5] = [2.0, 3.0, 4.0, 5.0, 6.0];

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    ensure(
        elapsed.as_secs_f64() < limit_s,
        format!(
            "{what} took {:.2} s, limit {limit_s} s",
            elapsed.as_secs_f64()
        ),
    )
}

/// Series for J_0, only used well inside its accurate range.
fn j0_series(x: f64) -> f64 {
    let q = -(x * x) / 4.0;
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 1..80 {
        term *= q / (k * k) as f64;
        sum += term;
    }
    sum
}

fn oracle_zero(mut lo: f64, mut hi: f64) -> f64 {
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if j0_series(lo).signum() == j0_series(mid).signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for m in 1..=10 {
        for k in 1..=60 {
            let x = 0.5 * k as f64;
            let lhs = bessel_j(m - 1, x).unwrap() + bessel_j(m + 1, x).unwrap();
            let rhs = 2.0 * m as f64 / x * bessel_j(m, x).unwrap();
            worst = worst.max((lhs - rhs).abs());
        }
    }
    ensure(worst < 1e-9, format!("recurrence residual {worst:e}"))?;

    let ours = gqd_core::special::find_roots(|x| bessel_j(0, x).unwrap(), 1e-6, 20.0, 3, 0.05)
        .map_err(|e| e.to_string())?;
    let oracle = [
        oracle_zero(2.0, 3.0),
        oracle_zero(5.0, 6.0),
        oracle_zero(8.0, 9.0),
    ];
    let zero_err = ours
        .iter()
        .zip(&oracle)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    ensure(
        ours.len() == 3 && zero_err < 1e-9,
        format!("J0 zeros off by {zero_err:e}"),
    )?;
    within(start.elapsed(), 1.0, "Bessel checks")?;
    Ok(format!("recurrence {worst:.1e}, zeros {zero_err:.1e}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for valley in [Valley::K, Valley::KPrime] {
        for m in -5..=5 {
            let f = BoundaryFunction::new(valley, m);
            for xi in dirac_roots(valley, m, 5, 0.05).map_err(|e| e.to_string())? {
                worst = worst.max(f.value(xi).abs());
            }
        }
    }
    ensure(worst < 1e-10, format!("boundary residual {worst:e}"))?;
    let kp = dirac_roots(Valley::KPrime, 0, 1, 0.05).unwrap()[0];
    let k = dirac_roots(Valley::K, 0, 1, 0.05).unwrap()[0];
    ensure(
        (kp - 1.4346956508195628833).abs() < 1e-8,
        format!("K' m=0 root {kp}"),
    )?;
    ensure(
        (k - 3.112864495417180068).abs() < 1e-8,
        format!("K m=0 root {k}"),
    )?;
    within(start.elapsed(), 1.0, "root checks")?;
    Ok(format!(
        "residual {worst:.1e}, lowest roots {kp:.10} / {k:.10}"
    ))
}

fn criterion_3(c: &PhysicalConstants) -> Check {
    let radii = [2.0, 5.0, 10.0, 20.0];
    let settings = DiracSettings::default();
    let scaled: Vec<Vec<f64>> = radii
        .iter()
        .map(|&r| {
            let levels = dirac_levels(&DotGeometry::new(r).unwrap(), &settings, c).unwrap();
            levels.iter().map(|l| l.energy * r).collect()
        })
        .collect();
    let mut worst = 0.0f64;
    for set in &scaled[1..] {
        ensure(set.len() == scaled[0].len(), "level count changed with R")?;
        for (a, b) in set.iter().zip(&scaled[0]) {
            worst = worst.max((a - b).abs() / b.abs());
        }
    }
    ensure(worst < 1e-12, format!("E·R spread {worst:e}"))?;
    let ratios: Vec<f64> = radii
        .iter()
        .map(|&r| {
            let g = dirac_gap(&DotGeometry::new(r).unwrap(), &settings, c).unwrap();
            g.exact / g.estimate
        })
        .collect();
    let spread = ratios
        .iter()
        .map(|r| (r - ratios[0]).abs())
        .fold(0.0, f64::max);
    ensure(spread < 1e-9, format!("gap/estimate spread {spread:e}"))?;
    Ok(format!(
        "E·R spread {worst:.1e}, gap/estimate = {:.10}",
        ratios[0]
    ))
}

struct Flake {
    radius: f64,
    n_sites: usize,
    spectrum: Spectrum,
}

fn criterion_4(c: &PhysicalConstants, flakes: &[Flake]) -> Check {
    let t = c.t_hop;
    let benzene = lattice_spectrum(
        &build_lattice(c.a_lattice, LatticeCenter::Hexagon, c).unwrap(),
        c,
    )
    .unwrap();
    let expected = [-2.0 * t, -t, -t, t, t, 2.0 * t];
    ensure(
        benzene.eigenvalues.len() == 6,
        "benzene disk is not six sites",
    )?;
    let benzene_err = benzene
        .eigenvalues
        .iter()
        .zip(expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    ensure(
        benzene_err < 1e-9 * t,
        format!("benzene error {benzene_err:e}"),
    )?;
    let mut worst_ph = 0.0f64;
    for f in flakes {
        let ph = f.spectrum.particle_hole_asymmetry();
        worst_ph = worst_ph.max(ph);
        ensure(
            ph < 1e-8 * t,
            format!("R = {}: particle-hole asymmetry {ph:e}", f.radius),
        )?;
        let trace: f64 = f.spectrum.eigenvalues.iter().sum();
        ensure(
            trace.abs() < 1e-9 * t * f.n_sites as f64,
            format!("R = {}: trace {trace:e}", f.radius),
        )?;
        ensure(
            f.spectrum.eigenvalues.iter().all(|v| v.abs() <= 3.0 * t),
            format!("R = {}: Gershgorin bound violated", f.radius),
        )?;
    }
    let largest = flakes.iter().map(|f| f.n_sites).max().unwrap_or(0);
    Ok(format!(
        "benzene {benzene_err:.1e}, worst particle-hole {worst_ph:.1e}, largest n = {largest}"
    ))
}

fn criterion_5(c: &PhysicalConstants, flakes: &[Flake]) -> Check {
    let t = c.t_hop;
    let synthetic: Vec<(usize, f64)> = [100usize, 400, 900, 1600, 2500, 3600]
        .iter()
        .map(|&n| (n, 2.0 * t / (n as f64).sqrt()))
        .collect();
    let fit = fit_gap_scaling(&synthetic).map_err(|e| e.to_string())?;
    ensure(
        (fit.exponent + 0.5).abs() < 1e-9 && (fit.prefactor - 2.0 * t).abs() < 1e-9,
        format!(
            "synthetic fit gave slope {} prefactor {}",
            fit.exponent, fit.prefactor
        ),
    )?;
    let points: Vec<(usize, f64)> = flakes.iter().map(|f| (f.n_sites, f.spectrum.gap)).collect();
    let fit = fit_gap_scaling(&points).map_err(|e| e.to_string())?;
    let gaps: Vec<String> = points
        .iter()
        .map(|(n, g)| format!("N={n}: {g:.3e} eV"))
        .collect();
    ensure(
        fit.used >= 5 && (-0.8..=-0.3).contains(&fit.exponent),
        format!(
            "lattice slope {:.3} over {} radii, outside [-0.8, -0.3] ({})",
            fit.exponent,
            fit.used,
            gaps.join(", ")
        ),
    )?;
    Ok(format!(
        "lattice slope {:.3}, synthetic slope recovered",
        fit.exponent
    ))
}

fn criterion_6(c: &PhysicalConstants, flakes: &[Flake]) -> Check {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for f in flakes.iter().filter(|f| f.radius >= 3.0) {
        let dirac = dirac_gap(
            &DotGeometry::new(f.radius).unwrap(),
            &DiracSettings::default(),
            c,
        )
        .map_err(|e| e.to_string())?
        .exact;
        let tb = f.spectrum.gap;
        let ratio = dirac.max(tb) / dirac.min(tb);
        rows.push(format!(
            "R={}: dirac {dirac:.4} tb {tb:.3e} ratio {ratio:.1}",
            f.radius
        ));
        if ratio.is_nan() || ratio > 3.0 {
            failures.push(format!("R={} ratio {ratio:.1}", f.radius));
        }
        if let Some((pd, pt)) = prev {
            if dirac >= pd {
                failures.push(format!("Dirac gap not decreasing at R={}", f.radius));
            }
            if tb >= pt {
                failures.push(format!("TB gap not decreasing at R={}", f.radius));
            }
        }
        prev = Some((dirac, tb));
    }
    ensure(
        failures.is_empty(),
        format!("{} [{}]", failures.join("; "), rows.join(", ")),
    )?;
    Ok(rows.join(", "))
}

fn criterion_7(c: &PhysicalConstants) -> Check {
    let sv = surface_to_volume(1e-8).unwrap();
    ensure(sv == 6e8, format!("S/V(10 nm) = {sv}"))?;
    let params = |radius| BrusParams {
        e_gap_bulk: 1.7,
        m_e_eff: 0.13,
        m_h_eff: 0.45,
        radius,
    };
    let shift = |r| brus_gap(&params(r), c).unwrap() - 1.7;
    let ratio = shift(2.0) / shift(4.0);
    ensure(
        (ratio - 4.0).abs() < 1e-12,
        format!("Brus shift ratio {ratio}"),
    )?;
    let e_c = charging_energy(1e-18, c).unwrap();
    ensure((e_c - 0.0801).abs() < 1e-4, format!("E_C(1 aF) = {e_c}"))?;
    let c_hi = capacitance_for_charging_energy(1e-3, c).unwrap() * 1e18;
    let c_lo = capacitance_for_charging_energy(1e-2, c).unwrap() * 1e18;
    ensure(
        (c_lo - 8.0).abs() < 0.05 && (c_hi - 80.1).abs() < 0.05,
        format!("1-10 meV maps to [{c_lo}, {c_hi}] aF"),
    )?;
    Ok(format!(
        "S/V 6e8, E_C(1 aF) = {e_c:.7} eV, C in [{c_lo:.2}, {c_hi:.2}] aF"
    ))
}

fn criterion_8(c: &PhysicalConstants) -> Check {
    let mut worst = 0.0f64;
    for n in 0..4 {
        for m in -3..=3 {
            let e =
                |b| landau_energy(&LandauParams { b_field: b, n, m }, LandauUnits::Si, c).unwrap();
            worst = worst
                .max((e(4.0) / e(1.0) - 2.0).abs())
                .max((e(9.0) / e(1.0) - 3.0).abs());
        }
    }
    ensure(worst < 1e-12, format!("√B scaling error {worst:e}"))?;

    let cap = 1e-18;
    let step = c.e_charge / cap;
    let curve = staircase_iv(cap, 1.0, 2001, c).map_err(|e| e.to_string())?;
    ensure(
        curve.step_voltage == step,
        format!("step spacing {} vs e/C {step}", curve.step_voltage),
    )?;
    for p in &curve.points {
        let expected = (cap * p.voltage.abs() / c.e_charge + 0.5)
            .floor()
            .copysign(p.voltage);
        ensure(
            p.current == expected || (p.current == 0.0 && expected == 0.0),
            format!("n({}) = {} expected {expected}", p.voltage, p.current),
        )?;
    }
    for k in 0..6 {
        let edge = (k as f64 + 0.5) * step;
        let below = staircase_current(cap, edge * (1.0 - 1e-9), c);
        let above = staircase_current(cap, edge * (1.0 + 1e-9), c);
        ensure(
            below == k as f64 && above == (k + 1) as f64,
            format!("step {k} not at {edge} V"),
        )?;
    }

    let cap_5mev = capacitance_for_charging_energy(5e-3, c).unwrap();
    let temps: Vec<f64> = (0..=400).map(|k| k as f64 * 0.25).collect();
    let checks: Vec<_> = temps
        .iter()
        .map(|&t| blockade_visible(cap_5mev, t, 10.0, c).unwrap())
        .collect();
    for w in checks.windows(2) {
        ensure(w[1].ratio < w[0].ratio, "ratio not decreasing in T")?;
        ensure(
            !(w[1].visible && !w[0].visible),
            "visibility reappears at higher T",
        )?;
    }
    for t in [0.0, 0.01, 0.05, 0.1] {
        ensure(
            blockade_visible(cap_5mev, t, 10.0, c).unwrap().visible,
            format!("E_C = 5 meV not visible at {t} K"),
        )?;
    }
    ensure(
        !blockade_visible(cap_5mev, 300.0, 10.0, c).unwrap().visible,
        "E_C = 5 meV visible at room temperature",
    )?;
    Ok(format!(
        "√B error {worst:.1e}, {} staircase samples exact",
        curve.points.len()
    ))
}

fn criterion_9() -> Check {
    for (ok, usage, domain) in SUBCOMMAND_CASES {
        let first = gqd(ok);
        ensure(
            first.status.code() == Some(0),
            format!("{ok:?} exited {:?}", first.status.code()),
        )?;
        ensure(
            gqd(ok).stdout == first.stdout,
            format!("{ok:?} not byte-identical"),
        )?;
        let code = gqd(usage).status.code();
        ensure(
            code == Some(2),
            format!("{usage:?} exited {code:?}, expected 2"),
        )?;
        let code = gqd(domain).status.code();
        ensure(
            code == Some(1),
            format!("{domain:?} exited {code:?}, expected 1"),
        )?;

        let mut csv_args = ok.to_vec();
        csv_args.extend(["--format", "csv"]);
        let mut json_args = ok.to_vec();
        json_args.extend(["--format", "json"]);
        let (headers, from_csv) = csv_numbers(&stdout(&gqd(&csv_args)));
        let from_json = json_numbers(&stdout(&gqd(&json_args)), &headers);
        let diff = max_rel_diff(&from_csv, &from_json);
        ensure(
            diff <= 1e-12,
            format!("{ok:?}: CSV/JSON differ by {diff:e}"),
        )?;
    }
    Ok(format!("{} subcommands", SUBCOMMAND_CASES.len()))
}

fn main() -> ExitCode {
    let suite_start = Instant::now();
    let c = PhysicalConstants::default();
    let flakes: Vec<Flake> = RADII_NM
        .iter()
        .map(|&radius| {
            let lattice = build_lattice(radius, LatticeCenter::Hexagon, &c).unwrap();
            Flake {
                radius,
                n_sites: lattice.n_sites(),
                spectrum: lattice_spectrum(&lattice, &c).unwrap(),
            }
        })
        .collect();

    let results: Vec<(u32, Check)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3(&c)),
        (
            4,
            criterion_4(&c, &flakes).and_then(|msg| {
                within(suite_start.elapsed(), 300.0, "lattice suite")?;
                Ok(msg)
            }),
        ),
        (5, criterion_5(&c, &flakes)),
        (6, criterion_6(&c, &flakes)),
        (7, criterion_7(&c)),
        (8, criterion_8(&c)),
        (9, criterion_9()),
    ];

    let mut failed = 0;
    for (n, result) in &results {
        match result {
            Ok(msg) => println!("criterion {n}: PASS ({msg})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({msg})");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1} s",
        results.len() - failed,
        suite_start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
