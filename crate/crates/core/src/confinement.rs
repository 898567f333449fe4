//! Scalar quantum-confinement estimates: Brus gap, surface-to-volume ratio
//! and the single-electron charging energy.

use serde::{Deserialize, Serialize};

use crate::constants::{nm_to_m, PhysicalConstants};
use crate::error::{require_positive, Error, Result};

/// Inputs to the effective-mass (Brus) gap.
///
/// Effective masses are dimensionless multiples of the electron rest mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BrusParams {
    /// Bulk band gap in eV.
    pub e_gap_bulk: f64,
    pub m_e_eff: f64,
    pub m_h_eff: f64,
    /// Dot radius in nm.
    pub radius: f64,
}

impl BrusParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.e_gap_bulk.is_finite() && self.e_gap_bulk >= 0.0) {
            return Err(Error::domain(format!(
                "bulk gap must be finite and >= 0, got {}",
                self.e_gap_bulk
            )));
        }
        require_positive(self.m_e_eff, "electron effective mass")?;
        require_positive(self.m_h_eff, "hole effective mass")?;
        require_positive(self.radius, "radius")?;
        Ok(())
    }
}

/// Confinement-enhanced gap `E_gap + h²/(8r²)·(1/m_e + 1/m_h)` in eV.
pub fn brus_gap(p: &BrusParams, consts: &PhysicalConstants) -> Result<f64> {
    p.validate()?;
    let r = nm_to_m(p.radius);
    let inv_mass = 1.0 / (p.m_e_eff * consts.m0) + 1.0 / (p.m_h_eff * consts.m0);
    let confinement_j = consts.h * consts.h / (8.0 * r * r) * inv_mass;
    Ok(p.e_gap_bulk + consts.joule_to_ev(confinement_j))
}

/// Surface-to-volume ratio `6/D` of a sphere, in 1/m for a diameter in m.
pub fn surface_to_volume(diameter_m: f64) -> Result<f64> {
    Ok(6.0 / require_positive(diameter_m, "diameter")?)
}

/// Charging energy `e²/2C` in eV for a capacitance in farads.
pub fn charging_energy(capacitance_f: f64, consts: &PhysicalConstants) -> Result<f64> {
    let c = require_positive(capacitance_f, "capacitance")?;
    // e²/(2C) in joules divided by e
    Ok(consts.e_charge / (2.0 * c))
}

/// Capacitance in farads whose charging energy is `energy_ev`.
pub fn capacitance_for_charging_energy(energy_ev: f64, consts: &PhysicalConstants) -> Result<f64> {
    let e_c = require_positive(energy_ev, "charging energy")?;
    Ok(consts.e_charge / (2.0 * e_c))
}
