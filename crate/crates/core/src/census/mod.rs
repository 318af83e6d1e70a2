//! Levi factors, pi-systems, bound evaluators and the admissibility audit of
//! large reductive subalgebras of so(n, C).

mod admissible;
mod descriptor;
mod regular;

pub use admissible::{
    admissible_report, admissible_report_capped, binom2, bounds, AdmissibleReport, Bounds,
    Candidate, Case, Verdict, DEFAULT_CAP,
};
pub use descriptor::{Source, SubalgebraDescriptor};
pub use regular::{levi_factor, max_regular_reductive, pi_systems, PiKind, PiSystem};
