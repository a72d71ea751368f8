use thiserror::Error;

/// Errors raised by the exact-arithmetic, series and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("double factorial is undefined for even negative argument {0}")]
    EvenNegativeDoubleFactorial(i64),

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cannot differentiate a series truncated at order 0")]
    DerivativeOfConstantOrder,

    #[error("cannot extend a series of order {have} to order {want}")]
    TruncationAboveOrder { have: usize, want: usize },

    #[error("unknown explicit formula variant {0} (expected 1, 2 or 3)")]
    InvalidVariant(u8),

    #[error("higher-order Legendre exponent must be positive")]
    NonPositiveAlpha,

    #[error("coefficient index out of range: i={i}, N={n}")]
    IndexOutOfRange { i: usize, n: usize },

    #[error("truncation order {order} is below N={n}")]
    OrderBelowN { order: usize, n: usize },

    #[error("N must be at least 1")]
    ZeroN,
}

pub type Result<T> = std::result::Result<T, Error>;
