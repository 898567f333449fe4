//! Real-space nearest-neighbour tight-binding model of a disk-shaped flake.

mod eigen;
mod lattice;

use rayon::prelude::*;
use serde::Serialize;

pub use eigen::{eigenvalues_symmetric, SquareMatrix, MAX_QL_ITERATIONS, SYMMETRY_TOLERANCE};
pub use lattice::{build_lattice, HexLattice, LatticeCenter, Site, Sublattice};

use crate::constants::PhysicalConstants;
use crate::dirac::DiracLevel;
use crate::error::{Error, Result};

/// `H_ij = −t` on every bond, zero elsewhere (eV).
pub fn build_hamiltonian(lattice: &HexLattice, t_hop: f64) -> SquareMatrix {
    let mut h = SquareMatrix::zeros(lattice.n_sites());
    for &(i, j) in &lattice.bonds {
        h[(i, j)] = -t_hop;
        h[(j, i)] = -t_hop;
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Dirac,
    TightBinding,
}

/// Sorted single-particle energies with the half-filling gap.
///
/// With `n` states the lowest `⌈n/2⌉` are filled, so for odd `n` the gap
/// is measured from the middle (zero-energy) state upward.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    /// eV, ascending
    pub eigenvalues: Vec<f64>,
    pub model: Model,
    /// Atom count for the lattice model; `None` for the continuum model.
    pub n_sites: Option<usize>,
    pub homo_index: usize,
    /// eV
    pub gap: f64,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>, model: Model, n_sites: Option<usize>) -> Result<Self> {
        if eigenvalues.len() < 2 {
            return Err(Error::domain("a gap needs at least two levels"));
        }
        eigenvalues.sort_by(f64::total_cmp);
        let homo_index = eigenvalues.len().div_ceil(2) - 1;
        let gap = eigenvalues[homo_index + 1] - eigenvalues[homo_index];
        Ok(Spectrum {
            eigenvalues,
            model,
            n_sites,
            homo_index,
            gap,
        })
    }

    /// Continuum levels as a spectrum; the valence half is filled.
    pub fn from_dirac_levels(levels: &[DiracLevel]) -> Result<Self> {
        Spectrum::new(
            levels.iter().map(|l| l.energy).collect(),
            Model::Dirac,
            None,
        )
    }

    /// Number of eigenvalues with `|λ| < tolerance`.
    pub fn zero_modes(&self, tolerance: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|v| v.abs() < tolerance)
            .count()
    }

    /// `max_i |λ_i + λ_{n−1−i}|`, zero for a spectrum symmetric about 0.
    pub fn particle_hole_asymmetry(&self) -> f64 {
        let ev = &self.eigenvalues;
        ev.iter()
            .zip(ev.iter().rev())
            .map(|(a, b)| (a + b).abs())
            .fold(0.0, f64::max)
    }
}

/// Spectrum of an existing lattice.
pub fn lattice_spectrum(lattice: &HexLattice, consts: &PhysicalConstants) -> Result<Spectrum> {
    let h = build_hamiltonian(lattice, consts.t_hop);
    let eigenvalues = eigenvalues_symmetric(&h)?;
    Spectrum::new(eigenvalues, Model::TightBinding, Some(lattice.n_sites()))
}

/// Builds the flake for `radius` nm and diagonalizes it.
pub fn tb_spectrum(
    radius: f64,
    center: LatticeCenter,
    consts: &PhysicalConstants,
) -> Result<Spectrum> {
    let lattice = build_lattice(radius, center, consts)?;
    lattice_spectrum(&lattice, consts)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapSample {
    pub radius_nm: f64,
    pub n_sites: usize,
    pub gap_ev: f64,
}

/// Least-squares fit of `ln gap = ln prefactor + exponent · ln N`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapFit {
    pub exponent: f64,
    /// eV
    pub prefactor: f64,
    pub used: usize,
    /// Samples left out because their gap was not positive.
    pub excluded: Vec<usize>,
}

/// Fits `gap ≈ prefactor · N^exponent` through `(N, gap)` pairs.
pub fn fit_gap_scaling(points: &[(usize, f64)]) -> Result<GapFit> {
    let mut excluded = Vec::new();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (k, &(n, gap)) in points.iter().enumerate() {
        if gap > 0.0 && gap.is_finite() && n > 0 {
            xs.push((n as f64).ln());
            ys.push(gap.ln());
        } else {
            log::warn!("excluding sample {k} (N = {n}, gap = {gap}) from the scaling fit");
            excluded.push(k);
        }
    }
    if xs.len() < 3 {
        return Err(Error::domain(format!(
            "scaling fit needs at least 3 positive gaps, got {}",
            xs.len()
        )));
    }
    let count = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / count;
    let mean_y = ys.iter().sum::<f64>() / count;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    if sxx == 0.0 {
        return Err(Error::domain(
            "scaling fit needs at least two distinct sizes",
        ));
    }
    let exponent = sxy / sxx;
    Ok(GapFit {
        exponent,
        prefactor: (mean_y - exponent * mean_x).exp(),
        used: xs.len(),
        excluded,
    })
}

/// Half-filling gaps for each radius, computed in parallel, in input order.
pub fn gap_samples(
    radii: &[f64],
    center: LatticeCenter,
    consts: &PhysicalConstants,
) -> Result<Vec<GapSample>> {
    radii
        .par_iter()
        .map(|&radius_nm| {
            let spec = tb_spectrum(radius_nm, center, consts)?;
            Ok(GapSample {
                radius_nm,
                n_sites: spec.n_sites.unwrap_or(0),
                gap_ev: spec.gap,
            })
        })
        .collect()
}

/// Gap-versus-size scan over at least four radii followed by the log-log fit.
pub fn gap_scaling_fit(
    radii: &[f64],
    center: LatticeCenter,
    consts: &PhysicalConstants,
) -> Result<(Vec<GapSample>, GapFit)> {
    if radii.len() < 4 {
        return Err(Error::domain(format!(
            "scaling fit needs at least 4 radii, got {}",
            radii.len()
        )));
    }
    let samples = gap_samples(radii, center, consts)?;
    let points: Vec<(usize, f64)> = samples.iter().map(|s| (s.n_sites, s.gap_ev)).collect();
    let fit = fit_gap_scaling(&points)?;
    Ok((samples, fit))
}
