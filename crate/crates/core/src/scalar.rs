//! Scalar types usable as series coefficients.

use num_traits::{FromPrimitive, Num};
use std::fmt::Debug;
use std::ops::Neg;

/// A field of coefficients: exact rationals, `f64` or `f32`.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Debug + PartialEq + Send + Sync + 'static
{
    /// Embeds a non-negative count (multiplicity or symmetry coefficient).
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count is representable in the scalar type")
    }

    /// Embeds a signed integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable in the scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + Debug + PartialEq + Send + Sync + 'static
{
}
