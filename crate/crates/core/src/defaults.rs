//! Default parameters for every model, kept in one place.
//!
//! | parameter                         | default      |
//! |-----------------------------------|--------------|
//! | Dirac angular momentum range      | m ∈ [−5, 5]  |
//! | Dirac radial roots per channel    | 5            |
//! | Dirac valleys                     | K and K′     |
//! | root scan step (dimensionless ξ)  | 0.05         |
//! | root scan hard cap (ξ)            | 1024         |
//! | wavefunction samples              | 201          |
//! | lattice centre                    | hexagon      |
//! | gap-vs-size radii (nm)            | 2, 3, 4, 5, 6|
//! | Landau n_max, m_max               | 3, 3         |
//! | blockade visibility factor        | 10           |

pub const M_MIN: i32 = -5;
pub const M_MAX: i32 = 5;
pub const N_MAX: usize = 5;
pub const SCAN_STEP: f64 = 0.05;
pub const SCAN_CAP: f64 = 1024.0;
pub const WAVEFUNCTION_SAMPLES: usize = 201;
pub const MIN_WAVEFUNCTION_SAMPLES: usize = 16;
pub const GAP_RADII_NM: [f64; 5] = [2.0, 3.0, 4.0, 5.0, 6.0];
pub const LANDAU_N_MAX: u32 = 3;
pub const LANDAU_M_MAX: u32 = 3;
pub const VISIBILITY_FACTOR: f64 = 10.0;

/// Radii outside this window (nm) are accepted but logged as unusual.
pub const PRACTICAL_RADIUS_NM: (f64, f64) = (0.5, 100.0);
