use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Sites this far outside the disk (nm) still count as inside.
const EDGE_TOLERANCE_NM: f64 = 1e-9;
/// Coordinate rounding (per nm) used for the canonical site order.
const ORDER_GRID_PER_NM: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sublattice {
    A,
    B,
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sublattice::A => "A",
            Sublattice::B => "B",
        })
    }
}

/// Where the disk centre sits relative to the honeycomb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum LatticeCenter {
    /// Centre of a hexagon; the flake keeps the full six-fold symmetry.
    #[default]
    Hexagon,
    /// On an A atom.
    Atom,
}

impl FromStr for LatticeCenter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hexagon" => Ok(LatticeCenter::Hexagon),
            "atom" => Ok(LatticeCenter::Atom),
            other => Err(Error::domain(format!("unknown lattice centre {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Site {
    /// nm
    pub x: f64,
    /// nm
    pub y: f64,
    pub sublattice: Sublattice,
}

/// A disk-shaped graphene flake with its nearest-neighbour bonds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HexLattice {
    pub sites: Vec<Site>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub bonds: Vec<(usize, usize)>,
    /// nm
    pub radius: f64,
    pub center: LatticeCenter,
}

impl HexLattice {
    pub fn n_sites(&self) -> usize {
        self.sites.len()
    }

    /// `(N_A, N_B)`.
    pub fn sublattice_counts(&self) -> (usize, usize) {
        let a = self
            .sites
            .iter()
            .filter(|s| s.sublattice == Sublattice::A)
            .count();
        (a, self.sites.len() - a)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.sites.len()];
        for &(i, j) in &self.bonds {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn bond_length(&self, bond: (usize, usize)) -> f64 {
        let (p, q) = (self.sites[bond.0], self.sites[bond.1]);
        (p.x - q.x).hypot(p.y - q.y)
    }
}

/// Cuts a disk of `radius` nm out of an infinite honeycomb.
///
/// Every site within the radius is kept together with every bond whose two
/// ends survive. Sites left without any bond are dropped; singly bonded
/// edge atoms stay. Sites are ordered by their coordinates rounded to 1e-6 nm
/// (x first, then y) so the output is reproducible.
pub fn build_lattice(
    radius: f64,
    center: LatticeCenter,
    consts: &PhysicalConstants,
) -> Result<HexLattice> {
    let a = consts.a_lattice;
    if !(radius.is_finite() && radius >= a) {
        return Err(Error::domain(format!(
            "lattice radius must be >= the bond length {a} nm, got {radius}"
        )));
    }
    let sqrt3 = 3f64.sqrt();
    // Bravais vectors; A sits at (0, a) and B at (0, -a) so the origin is
    // a hexagon centre.
    let a1 = (sqrt3 * a, 0.0);
    let a2 = (0.5 * sqrt3 * a, 1.5 * a);
    let shift = match center {
        LatticeCenter::Hexagon => (0.0, 0.0),
        LatticeCenter::Atom => (0.0, -a),
    };
    let position = |sub: Sublattice, i: i64, j: i64| {
        let basis_y = match sub {
            Sublattice::A => a,
            Sublattice::B => -a,
        };
        let (fi, fj) = (i as f64, j as f64);
        (
            fi * a1.0 + fj * a2.0 + shift.0,
            fi * a1.1 + fj * a2.1 + basis_y + shift.1,
        )
    };

    let j_span = (radius / (1.5 * a)).ceil() as i64 + 2;
    let i_span = (radius / (sqrt3 * a)).ceil() as i64 + j_span + 2;
    let mut index: HashMap<(Sublattice, i64, i64), usize> = HashMap::new();
    let mut raw_sites = Vec::new();
    for j in -j_span..=j_span {
        for i in -i_span..=i_span {
            for sub in [Sublattice::A, Sublattice::B] {
                let (x, y) = position(sub, i, j);
                if x.hypot(y) <= radius + EDGE_TOLERANCE_NM {
                    index.insert((sub, i, j), raw_sites.len());
                    raw_sites.push(Site {
                        x,
                        y,
                        sublattice: sub,
                    });
                }
            }
        }
    }

    // each A(i, j) bonds to B(i, j+1), B(i-1, j+1) and B(i-1, j+2)
    let mut raw_bonds = Vec::new();
    for (&(sub, i, j), &ia) in &index {
        if sub != Sublattice::A {
            continue;
        }
        for (di, dj) in [(0, 1), (-1, 1), (-1, 2)] {
            if let Some(&ib) = index.get(&(Sublattice::B, i + di, j + dj)) {
                raw_bonds.push((ia, ib));
            }
        }
    }
    if raw_bonds.is_empty() {
        return Err(Error::domain(format!(
            "radius {radius} nm does not contain a complete bond"
        )));
    }

    let mut bonded = vec![false; raw_sites.len()];
    for &(p, q) in &raw_bonds {
        bonded[p] = true;
        bonded[q] = true;
    }
    let key = |s: &Site| {
        (
            (s.x * ORDER_GRID_PER_NM).round() as i64,
            (s.y * ORDER_GRID_PER_NM).round() as i64,
        )
    };
    let mut order: Vec<usize> = (0..raw_sites.len()).filter(|&k| bonded[k]).collect();
    order.sort_by_key(|&k| key(&raw_sites[k]));
    let mut new_index = vec![usize::MAX; raw_sites.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let sites: Vec<Site> = order.iter().map(|&k| raw_sites[k]).collect();
    let mut bonds: Vec<(usize, usize)> = raw_bonds
        .into_iter()
        .map(|(p, q)| {
            let (p, q) = (new_index[p], new_index[q]);
            (p.min(q), p.max(q))
        })
        .collect();
    bonds.sort_unstable();

    Ok(HexLattice {
        sites,
        bonds,
        radius,
        center,
    })
}
