//! Exact verification of stabilizer computations for Weyl-type curvature
//! tensors in dimensions 4 through 10.

pub mod census;
pub mod error;
pub mod exact;
pub mod lie;
pub mod realforms;
pub mod roots;
pub mod suite;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, Field, Gaussian, GaussianMatrix, Matrix, Poly, Scalar};
