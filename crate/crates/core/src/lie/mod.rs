//! Matrix Lie algebras over exact fields and the named embeddings.

mod algebra;
mod construct;
mod form;

pub use algebra::{AlgebraInvariants, ComplexLieAlgebra, MatrixLieAlgebra, RealLieAlgebra};
pub use construct::{
    act_on_three_form, associative_form, complex_structure, construct_complex, construct_real,
    construct_subalgebra, grading, r1_basis, rotation, so3_chiral, Chirality, Constructed,
    SixCandidate, SubalgebraSpec, ASSOCIATIVE_TERMS,
};
pub use form::{FormKind, MetricForm};
