//! Exact elemental differential operators on polynomial vector fields.
//!
//! Everything here is polynomial over the rationals (or any [`Scalar`](crate::Scalar)),
//! so each identity of the series algebra can be checked by exact equality.
//! The step size `h` of a series is represented as an extra trailing
//! polynomial variable that is never differentiated.

mod operator;
mod poly;
mod sseries;
mod verify;

pub use operator::{apply_operator, tree_vector_field};
pub use poly::{Exponents, PolyScalar, PolyVecField};
pub use sseries::{bseries_field, sseries_apply};
pub use verify::{
    verify_composition_lemma, verify_composition_theorem, verify_sseries_of_map,
    verify_substitution_theorem, Comparison,
};
