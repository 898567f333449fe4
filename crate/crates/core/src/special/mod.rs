//! Integer-order Bessel functions of the first kind and a scan-and-bisect
//! root finder. Together they are the numerical kernel of the Dirac solver.

mod bessel;
mod roots;

pub use bessel::{bessel_j, BesselOrder, SERIES_LIMIT};
pub use roots::{bisect, find_roots, RootBracket, BISECTION_WIDTH, ROOT_RESIDUAL};
