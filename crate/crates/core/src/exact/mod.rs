//! Exact rational and Gaussian-rational linear algebra.

mod eigen;
mod field;
mod gaussian;
mod matrix;
mod poly;
mod scalar;
mod sparse;

pub use eigen::{
    common_rational_eigenlines, intersect, rational_eigenspaces, signature, span_basis,
    CommonEigen, CommonEigenspace, RationalEigen,
};
pub use field::Field;
pub use gaussian::Gaussian;
pub use matrix::{ExactMatrix, GaussianMatrix, Matrix};
pub use poly::{charpoly, Poly};
pub use scalar::Scalar;
pub use sparse::{EchelonSolver, SparseVec};
