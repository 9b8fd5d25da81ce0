//! The substitution law: replacing the vector field of an aromatic series
//! by an aromatic B-series.

mod partition;
mod star;
mod symbolic;

pub use partition::{skeleton, tree_partitions, TreePartition};
pub use star::{divergence, star_inverse, star_product};
pub use symbolic::{star_product_symbolic, Monomial, SymbolicPoly};
