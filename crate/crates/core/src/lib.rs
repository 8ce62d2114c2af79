//! Sharp coefficient-functional bounds for two Sakaguchi-type starlike classes.
//!
//! The library expands class members from Schwarz functions, evaluates
//! Hankel and Toeplitz functionals exactly or in floating point, certifies the
//! reduced extremal problems on their compact parameter regions, and
//! stress-tests the claimed bounds by sampling.

pub mod certify;
pub mod classes;
pub mod error;
pub mod expand;
pub mod functionals;
pub mod harness;
pub mod report;
pub mod scalar;
pub mod schwarz;
pub mod series;
pub mod wspec;

pub use classes::{ClassId, CoefficientVector, Extremal, ExtremalWhich};
pub use error::{Error, Result};
pub use functionals::FunctionalId;
pub use scalar::{Rational, RealScalar, Scalar};
pub use series::{AnySeries, ScalarMode, TruncatedSeries};
