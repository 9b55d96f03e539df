//! Exact growth functions of hyperbolic Coxeter groups, root location for
//! their denominators, and Salem / 2-Salem classification.

pub mod certify;
pub mod coxeter;
pub mod error;
pub mod exactpoly;
pub mod geometry;
pub mod gluing;
pub mod golden;
pub mod rootloc;
pub mod verify;

pub use error::{Error, Result};
