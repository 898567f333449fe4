//! Single-particle spectra of circular graphene quantum dots.
//!
//! Two independent models are provided:
//!
//! * [`dirac`]: the continuum Dirac equation with an infinite-mass edge,
//!   solved through Bessel-function boundary equations;
//! * [`tight_binding`]: a nearest-neighbour hopping model on a disk-shaped
//!   honeycomb flake, diagonalized with a dense symmetric eigensolver.
//!
//! Alongside them sit scalar confinement estimates ([`confinement`]) and
//! Landau-level / Coulomb-blockade helpers ([`landau`]). All energies are
//! in eV and lengths in nm unless a name says otherwise.

pub mod confinement;
pub mod constants;
pub mod defaults;
pub mod dirac;
pub mod error;
pub mod landau;
pub mod special;
pub mod tight_binding;

pub use constants::PhysicalConstants;
pub use error::{Error, Result};
