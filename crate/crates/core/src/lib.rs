//! Exact computer algebra for aromatic B-series.
//!
//! Aromatic forests are directed graphs in which every vertex has at most one
//! outgoing edge, taken up to isomorphism. This crate canonicalizes and
//! enumerates them, computes their symmetry coefficients, and implements the
//! algebra of series indexed by them: the coproduct and composition law, the
//! substitution law and the divergence of aromatic B-series. The [`elemental`]
//! module evaluates elemental differential operators on polynomial vector
//! fields with exact rational arithmetic and checks the algebraic laws against
//! them. The [`integrator`] module is a small floating-point laboratory for the
//! pre-processed implicit midpoint rule.
//!
//! Most of the algebra is generic over a [`Scalar`]; the aliases at the crate
//! root pick exact rationals, which is what the verification code uses.

pub mod elemental;
pub mod error;
pub mod forest;
pub mod integrator;
pub mod random;
pub mod scalar;
pub mod series;
pub mod substitution;

mod memo;

pub use error::{Error, Result};
pub use forest::{AromaticForest, DirectedGraph, ForestClass, ForestFilter};
pub use scalar::Scalar;
pub use series::{CoeffMap, Domain, FormalSum, TensorSum};

/// Arbitrary-precision rational, the default coefficient field.
pub type Rational = num_rational::BigRational;

/// Coefficient map with exact rational values.
pub type RationalMap = CoeffMap<Rational>;
/// Coefficient map with double-precision values.
pub type Map64 = CoeffMap<f64>;
/// Coefficient map with single-precision values.
pub type Map32 = CoeffMap<f32>;

/// Polynomial scalar field over the rationals.
pub type RationalPoly = elemental::PolyScalar<Rational>;
/// Polynomial vector field over the rationals.
pub type RationalField = elemental::PolyVecField<Rational>;

/// Numeric vector field in double precision.
pub type Field64 = integrator::NumericField<f64>;
/// Numeric vector field in single precision.
pub type Field32 = integrator::NumericField<f32>;
