//! Root systems, Weyl dimensions, duality and Dynkin subdiagram recognition.

mod recognize;
mod system;
mod types;
mod weights;

pub use recognize::{components, isomorphic, recognize};
pub use system::RootSystem;
pub use types::{normalize_label, so_factors, sp_factors, CartanType, Family};
pub use weights::{dual, parity_indices, rep_type, two_rho_coroot, weyl_dim, RepType, Weight};
