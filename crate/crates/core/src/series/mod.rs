//! Coefficient maps on aromatic forests and the Hopf-algebraic operations
//! on them: the coproduct, the composition product and its inverse, the
//! antipode, the product on rootless forests and the bar extension.

mod aroma;
mod coeff_map;
mod composition;
mod coproduct;
mod sums;

pub use aroma::{aroma_coproduct, aroma_dual_product, bar_extend, bar_value};
pub use coeff_map::{parse_rational, CoeffMap, Domain};
pub use composition::{antipode, comp_inverse, comp_product};
pub use coproduct::{
    admissible_partitions, coproduct, graph_composition, inherited_coproduct, reduced_coproduct,
};
pub use sums::{FormalSum, TensorSum};
