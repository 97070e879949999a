//! Degrees of dual varieties of projective toric surfaces and 3-folds,
//! computed from Euler obstructions of their lattice polytopes.

pub mod cone;
pub mod error;
pub mod lattice;
pub mod pllp;
pub mod polyfile;
pub mod polytope;
pub mod report;
pub mod surface;
pub mod sweep;
pub mod threefold;
pub mod wps;

pub use error::{Error, Result};
