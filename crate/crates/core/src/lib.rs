//! Exact computational algebra for polynomial functors.
//!
//! The crate has four layers:
//!
//! * [`partition`] — tableau combinatorics: partition enumeration, hook
//!   formulas and Littlewood-Richardson coefficients.
//! * [`functor`] — the formal algebra of polynomial functors as Schur
//!   decompositions: direct sum, tensor product, grading, shifting and the
//!   well-founded order.
//! * [`dsl`] / [`tensor`] — a small parsed language of tensor-polynomial
//!   transformations with exact rational evaluation, equivariance and
//!   homogeneity checking.
//! * [`subset`] / [`examples`] — membership oracles for subsets of
//!   polynomial functors, pullback witness search against a claimed
//!   determining dimension, and a catalog of worked example subsets.
//!
//! All arithmetic is exact: counts are big integers, tensor entries are big
//! rationals, and no floating point appears anywhere.

pub mod dsl;
pub mod examples;
pub mod functor;
pub mod linalg;
pub mod partition;
pub mod sample;
pub mod subset;
pub mod tensor;

pub use functor::{OrderVerdict, PolynomialFunctor};
pub use linalg::RatMatrix;
pub use partition::{lr_coefficient, partitions_of, schur_dim, skew_schur_dim, syt_count, Partition};
pub use tensor::DenseTensor;

/// The scalar type of the whole crate: arbitrary-precision rationals.
pub type Rational = num::BigRational;
