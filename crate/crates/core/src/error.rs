use thiserror::Error;

/// Errors raised by the library. Every variant is a usage error: the
/// numerical routines themselves cannot fail on well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar mode mismatch: {left} series combined with {right} series")]
    ScalarModeMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("inner series must have a zero constant term")]
    NonZeroConstantTerm,
    #[error("series is not normalized (expected constant term 0 and linear term 1)")]
    NotNormalized,
    #[error("truncation order {got} is too small, need at least {need}")]
    OrderTooSmall { got: usize, need: usize },
    #[error("phi must have constant term 1")]
    PhiNotNormalized,
    #[error("{name} = {value} lies outside the admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: String,
        range: &'static str,
    },
    #[error("sampler kind {0} cannot produce this output")]
    WrongSamplerKind(&'static str),
    #[error("unknown functional `{0}`")]
    UnknownFunctional(String),
    #[error("unknown class `{0}` (expected `sse` or `ssl`)")]
    UnknownClass(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
