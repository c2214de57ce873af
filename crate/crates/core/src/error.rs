use thiserror::Error;

/// Errors raised by the exact-arithmetic, series and partition-polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be at least 1")]
    ZeroArgument { what: &'static str },

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("a truncated series needs at least one coefficient")]
    EmptySeries,

    #[error("series with zero constant term has no reciprocal")]
    NotInvertible,

    #[error("logarithm needs constant term 1, found {found}")]
    LogDomain { found: String },

    #[error("exponential needs constant term 0, found {found}")]
    ExpDomain { found: String },

    #[error("coefficient {n} requested from a series of order {order}")]
    IndexOutOfRange { n: usize, order: usize },

    #[error("invalid support set: {0}")]
    InvalidSupport(String),

    #[error("factor exponent must be nonzero")]
    ZeroExponent,

    #[error("a product needs at least one factor")]
    EmptyProduct,

    #[error("exponent list has {got} entries but the product has {expected} factors")]
    ExponentCount { expected: usize, got: usize },

    #[error("{name}({n}) evaluated to {value}, which is not a nonnegative integer")]
    NonIntegral { name: String, n: usize, value: String },

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
