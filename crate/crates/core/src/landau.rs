//! Landau levels of Dirac fermions in a perpendicular field and a
//! zero-temperature Coulomb-blockade staircase.

use std::str::FromStr;

use serde::Serialize;

use crate::confinement::charging_energy;
use crate::constants::PhysicalConstants;
use crate::error::{require_positive, Error, Result};

/// How the Landau formula treats its `1/c` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum LandauUnits {
    /// `ħ v_F √(2eB/ħ · (n + |m| + 1/2))` in SI.
    #[default]
    Si,
    /// The Gaussian-units expression `ħ v_F √(2eB/(ħc) · …)` evaluated with
    /// SI numbers, for auditing only. Off by `√c` from the physical scale.
    GaussianLiteral,
}

impl FromStr for LandauUnits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "si" => Ok(LandauUnits::Si),
            "gaussian-literal" => Ok(LandauUnits::GaussianLiteral),
            other => Err(Error::domain(format!("unknown Landau units {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LandauParams {
    /// tesla
    pub b_field: f64,
    pub n: u32,
    pub m: i32,
}

/// Bulk Landau energy in eV (no edge matching).
pub fn landau_energy(
    p: &LandauParams,
    units: LandauUnits,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let b = require_positive(p.b_field, "magnetic field")?;
    let ladder = f64::from(p.n) + f64::from(p.m.unsigned_abs()) + 0.5;
    let mut inv_length_sq = 2.0 * consts.e_charge * b / consts.hbar * ladder;
    if units == LandauUnits::GaussianLiteral {
        inv_length_sq /= consts.c_light;
    }
    let joule = consts.hbar * consts.v_fermi * inv_length_sq.sqrt();
    Ok(consts.joule_to_ev(joule))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IvPoint {
    /// V
    pub voltage: f64,
    /// Plateau index; multiply by a step current to get amperes.
    pub current: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IvCurve {
    pub points: Vec<IvPoint>,
    /// F
    pub capacitance: f64,
    /// Plateau spacing `e/C` in V.
    pub step_voltage: f64,
}

/// Number of electrons admitted at bias `v`: `floor(C·|V|/e + 1/2)`, odd in `V`.
pub fn staircase_current(capacitance: f64, voltage: f64, consts: &PhysicalConstants) -> f64 {
    let steps = (capacitance * voltage.abs() / consts.e_charge + 0.5).floor();
    if steps == 0.0 {
        0.0
    } else {
        steps.copysign(voltage)
    }
}

/// Plateaus on `[0, v_max]`.
pub fn staircase_steps(capacitance: f64, v_max: f64, consts: &PhysicalConstants) -> u64 {
    (capacitance * v_max / consts.e_charge + 0.5).floor() as u64
}

/// Samples the blockade staircase uniformly on `[−v_max, v_max]`.
///
/// The first plateau starts at `e/2C` and later ones follow every `e/C`.
pub fn staircase_iv(
    capacitance: f64,
    v_max: f64,
    samples: usize,
    consts: &PhysicalConstants,
) -> Result<IvCurve> {
    let c = require_positive(capacitance, "capacitance")?;
    let v_max = require_positive(v_max, "maximum bias")?;
    if samples < 2 {
        return Err(Error::domain(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let last = (samples - 1) as f64;
    let points = (0..samples)
        .map(|i| {
            let voltage = if i + 1 == samples {
                v_max
            } else {
                -v_max + 2.0 * v_max * i as f64 / last
            };
            IvPoint {
                voltage,
                current: staircase_current(c, voltage, consts),
            }
        })
        .collect();
    Ok(IvCurve {
        points,
        capacitance: c,
        step_voltage: consts.e_charge / c,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlockadeCheck {
    pub visible: bool,
    /// `E_C / k_B T`; infinite at zero temperature.
    pub ratio: f64,
    /// eV
    pub charging_energy: f64,
    /// eV
    pub thermal_energy: f64,
}

/// Whether `E_C > factor · k_B T`.
pub fn blockade_visible(
    capacitance: f64,
    temperature: f64,
    factor: f64,
    consts: &PhysicalConstants,
) -> Result<BlockadeCheck> {
    if !(temperature.is_finite() && temperature >= 0.0) {
        return Err(Error::domain(format!(
            "temperature must be finite and >= 0, got {temperature}"
        )));
    }
    let factor = require_positive(factor, "visibility factor")?;
    let e_c = charging_energy(capacitance, consts)?;
    let thermal = consts.thermal_energy_ev(temperature);
    let ratio = if thermal == 0.0 {
        f64::INFINITY
    } else {
        e_c / thermal
    };
    Ok(BlockadeCheck {
        visible: ratio > factor,
        ratio,
        charging_energy: e_c,
        thermal_energy: thermal,
    })
}
