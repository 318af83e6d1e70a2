//! Real forms of so(2l, C) and of its gl(l, C) subalgebra cut out by
//! involutions commuting with the compact real structure.

mod forms;
mod involution;

pub use forms::{
    ambient_closed_form, ambient_fixed_dim, ambient_real_form, classify_family,
    enumerate_real_forms, gl_real_form_candidates, identify_gl_form, lorentzian_label,
    lorentzian_surrogate, sl_centralizer_span, subalgebra_real_form, AmbientForm, CentralizerCheck,
    RealFormId, RealFormPair, RealFormRow, RealFormTable, Surrogate, SurrogateBlock,
};
pub use involution::{
    ambient_so, compact_structure, conjugation_fixed, fixed_subalgebra, gl_embedding, ipq_matrix,
    AntiInvolution, Involution, InvolutionFamily,
};
