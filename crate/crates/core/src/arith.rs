//! Exact scalar layer: big rationals and the combinatorial functions built on them.
//!
//! Every value here is an exact [`Rational`] or [`BigInt`]; nothing touches floating point.
//! `BigRational` keeps itself reduced with a positive denominator, so structural equality
//! is value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` for `n >= 0`.
pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Double factorial, including the extension to negative odd arguments.
///
/// `n!!` is the product `n (n-2) (n-4) ...` down to 1 or 2 for `n > 0`, equals 1 for
/// `n` in `{-1, 0}`, and `(-2k-1)!! = (-1)^k / (2k-1)!!` for `k >= 1`. Even negative
/// arguments have no definition and are rejected.
pub fn double_factorial(n: i64) -> Result<Rational> {
    if n >= -1 {
        return Ok(Rational::from_integer(positive_double_factorial(n)));
    }
    if n % 2 == 0 {
        return Err(Error::EvenNegativeDoubleFactorial(n));
    }
    let k = (-n - 1) / 2;
    let sign = if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Ok(Rational::new(sign, positive_double_factorial(2 * k - 1)))
}

/// Integer double factorial for `n >= -1`; `(-1)!! = 0!! = 1`.
pub fn positive_double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Falling factorial `(x)_n = x (x-1) ... (x-n+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: &Rational, n: u32) -> Rational {
    let one = Rational::one();
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term -= &one;
    }
    acc
}

/// Step-2 descending product `<2N+alpha>_k = (2N+alpha)(2(N-1)+alpha)...(2(N-k+1)+alpha)`.
pub fn angle_bracket(n: i64, alpha: i64, k: u32) -> BigInt {
    step_two_product(2 * n + alpha, k)
}

/// `top (top-2) (top-4) ...` with `k` factors.
pub(crate) fn step_two_product(top: i64, k: u32) -> BigInt {
    (0..i64::from(k)).fold(BigInt::one(), |acc, j| acc * (top - 2 * j))
}

/// Generalized binomial coefficient `binom(x, k) = (x)_k / k!` for any rational `x`.
pub fn binomial(x: &Rational, k: u32) -> Rational {
    falling_factorial(x, k) / Rational::from_integer(factorial(k))
}

/// Integer binomial `binom(m, k)` for integer `m` (possibly negative).
pub fn binomial_int(m: i64, k: u32) -> BigInt {
    let value = binomial(&int(m), k);
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// The rational `r` with `Gamma(n + 1/2) = r * sqrt(pi)`, namely `(2n-1)!! / 2^n`.
pub fn gamma_half_integer(n: u32) -> Rational {
    let numerator = positive_double_factorial(2 * i64::from(n) - 1);
    Rational::new(numerator, BigInt::one() << n)
}

/// `(-1)^k` as an integer sign.
pub(crate) fn sign_of_power(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
