//! Exact computations for the walled Brauer-Clifford superalgebra, its bead
//! diagram calculus and its quantum deformation.

pub mod acceptance;
pub mod centralizer;
pub mod diagram;
pub mod error;
pub mod quantum;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod superlinalg;

pub use error::{Error, Result};
