//! Physical constants and the few unit conversions the models need.
//!
//! Internally energies are in electron-volts and lengths in nanometres.
//! SI inputs are converted at the boundary.
//!
//! | quantity            | symbol | value                | unit   |
//! |---------------------|--------|----------------------|--------|
//! | reduced Planck      | ħ      | 1.054571817e-34      | J·s    |
//! | Planck              | h      | 6.62607015e-34       | J·s    |
//! | elementary charge   | e      | 1.602176634e-19      | C      |
//! | electron rest mass  | m0     | 9.1093837015e-31     | kg     |
//! | Boltzmann           | k_B    | 8.617333262e-5       | eV/K   |
//! | speed of light      | c      | 299792458            | m/s    |
//! | Fermi velocity      | v_F    | 1.0e6 (overridable)  | m/s    |
//! | hopping energy      | t      | 2.8 (overridable)    | eV     |
//! | C–C bond length     | a      | 0.142 (overridable)  | nm     |
//!
//! Values are CODATA 2018. The material parameters `v_F`, `t` and `a` can
//! be overridden from a flat `key = value` file, see
//! [`PhysicalConstants::from_config_str`].

use serde::Serialize;

use crate::error::{require_positive, Error, Result};

pub const HBAR_J_S: f64 = 1.054_571_817e-34;
pub const PLANCK_J_S: f64 = 6.626_070_15e-34;
pub const ELEMENTARY_CHARGE_C: f64 = 1.602_176_634e-19;
pub const ELECTRON_MASS_KG: f64 = 9.109_383_701_5e-31;
pub const BOLTZMANN_EV_PER_K: f64 = 8.617_333_262e-5;
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

pub const DEFAULT_FERMI_VELOCITY_M_PER_S: f64 = 1.0e6;
pub const DEFAULT_HOPPING_EV: f64 = 2.8;
pub const DEFAULT_BOND_LENGTH_NM: f64 = 0.142;

const NM_PER_M: f64 = 1.0e9;

#[inline]
pub fn nm_to_m(nm: f64) -> f64 {
    nm / NM_PER_M
}

#[inline]
pub fn m_to_nm(m: f64) -> f64 {
    m * NM_PER_M
}

/// The constant set shared by every model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// ħ in J·s.
    pub hbar: f64,
    /// h in J·s.
    pub h: f64,
    /// e in C.
    pub e_charge: f64,
    /// Fermi velocity in m/s.
    pub v_fermi: f64,
    /// Nearest-neighbour hopping in eV.
    pub t_hop: f64,
    /// Carbon–carbon distance in nm.
    pub a_lattice: f64,
    /// Electron rest mass in kg.
    pub m0: f64,
    /// k_B in eV/K.
    pub k_boltzmann: f64,
    /// Speed of light in m/s. Only used by the literal Gaussian-units Landau formula.
    pub c_light: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants {
            hbar: HBAR_J_S,
            h: PLANCK_J_S,
            e_charge: ELEMENTARY_CHARGE_C,
            v_fermi: DEFAULT_FERMI_VELOCITY_M_PER_S,
            t_hop: DEFAULT_HOPPING_EV,
            a_lattice: DEFAULT_BOND_LENGTH_NM,
            m0: ELECTRON_MASS_KG,
            k_boltzmann: BOLTZMANN_EV_PER_K,
            c_light: SPEED_OF_LIGHT_M_PER_S,
        }
    }
}

impl PhysicalConstants {
    /// Keys accepted in a constants file.
    pub const CONFIG_KEYS: [&'static str; 3] = ["v_fermi_m_per_s", "t_hop_ev", "a_lattice_nm"];

    /// Parses `key = value` lines on top of the defaults.
    ///
    /// Blank lines and `#` comments are ignored. Unknown keys, duplicate
    /// keys and non-positive values are rejected.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut consts = PhysicalConstants::default();
        let mut seen = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let config_err = |message: String| Error::Config {
                line: line_no,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| config_err(format!("expected key = value, got {line:?}")))?;
            let key = key.trim();
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| config_err(format!("value for {key} is not a number")))?;
            if !(value.is_finite() && value > 0.0) {
                return Err(config_err(format!("{key} must be finite and > 0")));
            }
            if seen.contains(&key.to_string()) {
                return Err(config_err(format!("duplicate key {key}")));
            }
            match key {
                "v_fermi_m_per_s" => consts.v_fermi = value,
                "t_hop_ev" => consts.t_hop = value,
                "a_lattice_nm" => consts.a_lattice = value,
                other => {
                    return Err(config_err(format!(
                        "unknown key {other:?} (expected one of {})",
                        Self::CONFIG_KEYS.join(", ")
                    )))
                }
            }
            seen.push(key.to_string());
        }
        Ok(consts)
    }

    /// ħ in eV·s.
    pub fn hbar_ev_s(&self) -> f64 {
        self.hbar / self.e_charge
    }

    /// ħ·v_F in eV·nm, the natural energy-length scale of the Dirac model.
    pub fn hbar_vf_ev_nm(&self) -> f64 {
        m_to_nm(self.hbar_ev_s() * self.v_fermi)
    }

    /// ħ·v_F / R in eV for a radius in nm.
    pub fn hbar_vf_over_r(&self, radius_nm: f64) -> Result<f64> {
        let r = require_positive(radius_nm, "radius")?;
        Ok(self.hbar_vf_ev_nm() / r)
    }

    pub fn ev_to_joule(&self, ev: f64) -> f64 {
        ev * self.e_charge
    }

    pub fn joule_to_ev(&self, joule: f64) -> f64 {
        joule / self.e_charge
    }

    /// k_B·T in eV.
    pub fn thermal_energy_ev(&self, temperature_k: f64) -> f64 {
        self.k_boltzmann * temperature_k
    }
}
