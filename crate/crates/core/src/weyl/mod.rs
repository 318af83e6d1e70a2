//! Algebraic Weyl tensors, the orthogonal action on them, and stabilizers.

mod action;
mod space;
mod tensor;

pub use action::{
    act, annihilator, co_stabilizer, fixed_space, invariant_lines, InvariantLines, InvariantSpace,
    Stabilizer,
};
pub use space::{is_weyl, weyl_dim_formula, WeylSpace};
pub use tensor::{
    add_forms, make_tensor, riem2_reading, wedge, Dense4, SkewReading, TensorKind, TensorLayout,
    TensorW, TwoForm,
};
