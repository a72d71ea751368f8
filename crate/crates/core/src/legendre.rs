//! Legendre polynomials by four independent routes, their generating function, and
//! the higher-order polynomials obtained by powering it.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{binomial, factorial, int, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::series::TSeries;

/// The three closed explicit sums for `p_n(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExplicitFormula {
    /// `2^{-n} sum_k binom(n,k)^2 (x-1)^{n-k} (x+1)^k`
    SquaredBinomials,
    /// `sum_k binom(n,k) binom(-n-1,k) ((1-x)/2)^k`
    NegativeUpperBinomial,
    /// `2^n sum_k binom(n,k) binom((n+k-1)/2, n) x^k`
    HalfIntegerBinomial,
}

impl ExplicitFormula {
    pub const ALL: [ExplicitFormula; 3] = [
        ExplicitFormula::SquaredBinomials,
        ExplicitFormula::NegativeUpperBinomial,
        ExplicitFormula::HalfIntegerBinomial,
    ];

    /// Select by the 1-based variant number used on the command line.
    pub fn from_variant(variant: u8) -> Result<Self> {
        match variant {
            1 => Ok(ExplicitFormula::SquaredBinomials),
            2 => Ok(ExplicitFormula::NegativeUpperBinomial),
            3 => Ok(ExplicitFormula::HalfIntegerBinomial),
            other => Err(Error::InvalidVariant(other)),
        }
    }

    pub fn variant(self) -> u8 {
        match self {
            ExplicitFormula::SquaredBinomials => 1,
            ExplicitFormula::NegativeUpperBinomial => 2,
            ExplicitFormula::HalfIntegerBinomial => 3,
        }
    }
}

/// How a Legendre polynomial is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Recurrence,
    Rodrigues,
    Explicit(ExplicitFormula),
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::Recurrence,
        Generator::Rodrigues,
        Generator::Explicit(ExplicitFormula::SquaredBinomials),
        Generator::Explicit(ExplicitFormula::NegativeUpperBinomial),
        Generator::Explicit(ExplicitFormula::HalfIntegerBinomial),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Recurrence => "recurrence",
            Generator::Rodrigues => "rodrigues",
            Generator::Explicit(ExplicitFormula::SquaredBinomials) => "explicit1",
            Generator::Explicit(ExplicitFormula::NegativeUpperBinomial) => "explicit2",
            Generator::Explicit(ExplicitFormula::HalfIntegerBinomial) => "explicit3",
        }
    }

    pub fn build(self, n: usize) -> Poly {
        match self {
            Generator::Recurrence => legendre_recurrence(n),
            Generator::Rodrigues => legendre_rodrigues(n),
            Generator::Explicit(formula) => legendre_explicit(n, formula),
        }
    }
}

/// `p_0, ..., p_{n_max}` from `(n+1) p_{n+1} = (2n+1) x p_n - n p_{n-1}`.
///
/// The recurrence is the coefficient comparison of `(1 - 2tx + t^2) F' = (x - t) F`.
pub fn legendre_sequence(n_max: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Poly::one());
    if n_max == 0 {
        return out;
    }
    out.push(Poly::x());
    for n in 1..n_max {
        let a = Rational::new(BigInt::from(2 * n + 1), BigInt::from(n + 1));
        let b = Rational::new(BigInt::from(n), BigInt::from(n + 1));
        let next = out[n].shift(1).scale(&a) - out[n - 1].scale(&b);
        out.push(next);
    }
    out
}

pub fn legendre_recurrence(n: usize) -> Poly {
    legendre_sequence(n).pop().expect("sequence is never empty")
}

/// Rodrigues: `p_n = (2^n n!)^{-1} d^n/dx^n (x^2 - 1)^n`.
pub fn legendre_rodrigues(n: usize) -> Poly {
    let base = Poly::from_ints(&[-1, 0, 1]).pow(n as u32);
    let differentiated = (0..n).fold(base, |p, _| p.derivative());
    let norm = Rational::new(BigInt::one(), (BigInt::one() << n) * factorial(n as u32));
    differentiated.scale(&norm)
}

pub fn legendre_explicit(n: usize, formula: ExplicitFormula) -> Poly {
    let nr = int(n as i64);
    let k_range = 0..=n as u32;
    match formula {
        ExplicitFormula::SquaredBinomials => {
            let x_minus_one = Poly::from_ints(&[-1, 1]);
            let x_plus_one = Poly::from_ints(&[1, 1]);
            let sum = k_range.fold(Poly::zero(), |acc, k| {
                let c = binomial(&nr, k);
                let term = x_minus_one.pow(n as u32 - k) * x_plus_one.pow(k);
                acc + term.scale(&(&c * &c))
            });
            sum.scale(&Rational::new(BigInt::one(), BigInt::one() << n))
        }
        ExplicitFormula::NegativeUpperBinomial => {
            let half_one_minus_x = Poly::from_coeffs(vec![
                Rational::new(1.into(), 2.into()),
                Rational::new((-1).into(), 2.into()),
            ]);
            let upper = int(-(n as i64) - 1);
            k_range.fold(Poly::zero(), |acc, k| {
                let c = binomial(&nr, k) * binomial(&upper, k);
                acc + half_one_minus_x.pow(k).scale(&c)
            })
        }
        ExplicitFormula::HalfIntegerBinomial => {
            // The x^k factor belongs to the standard form of this sum.
            let two_n = Rational::from_integer(BigInt::one() << n);
            let coeffs = k_range
                .map(|k| {
                    let upper = Rational::new(BigInt::from(n as i64 + i64::from(k) - 1), 2.into());
                    binomial(&nr, k) * binomial(&upper, n as u32) * &two_n
                })
                .collect();
            Poly::from_coeffs(coeffs)
        }
    }
}

/// `(1 - x^2) p'' - 2x p' + n(n+1) p`
pub fn legendre_de_residual(n: usize, p: &Poly) -> Poly {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let one_minus_x2 = Poly::from_ints(&[1, 0, -1]);
    let eigen = int((n * (n + 1)) as i64);
    one_minus_x2 * &d2 - d1.shift(1).scale(&int(2)) + p.scale(&eigen)
}

/// Whether the recurrence-built `p_n` solves the Legendre equation exactly.
pub fn check_legendre_de(n: usize) -> bool {
    legendre_de_residual(n, &legendre_recurrence(n)).is_zero()
}

/// `F(t, x) = (1 - 2tx + t^2)^{-1/2}` truncated at `order`, coefficients from the recurrence.
pub fn generating_function(order: usize) -> TSeries {
    TSeries::new(order, legendre_sequence(order))
}

/// `F^alpha` truncated at `order`; the `t^n` coefficient is `p_n^{(alpha)}(x)`.
pub fn higher_order_series(alpha: u32, order: usize) -> Result<TSeries> {
    if alpha == 0 {
        return Err(Error::NonPositiveAlpha);
    }
    Ok(generating_function(order).pow(alpha))
}

/// The quadratic `1 - 2tx + t^2` as a series of the given order.
pub fn generator_base(order: usize) -> TSeries {
    TSeries::new(
        order,
        vec![Poly::one(), Poly::from_ints(&[0, -2]), Poly::one()],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn p(c: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&(a, b)| frac(a, b)).collect())
    }

    fn listed(n: usize) -> Poly {
        match n {
            0 => p(&[(1, 1)]),
            1 => p(&[(0, 1), (1, 1)]),
            2 => p(&[(-1, 2), (0, 1), (3, 2)]),
            3 => p(&[(0, 1), (-3, 2), (0, 1), (5, 2)]),
            4 => p(&[(3, 8), (0, 1), (-30, 8), (0, 1), (35, 8)]),
            5 => p(&[(0, 1), (15, 8), (0, 1), (-70, 8), (0, 1), (63, 8)]),
            6 => p(&[
                (-5, 16),
                (0, 1),
                (105, 16),
                (0, 1),
                (-315, 16),
                (0, 1),
                (231, 16),
            ]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn recurrence_matches_listed_polynomials() {
        for n in 0..=6 {
            assert_eq!(legendre_recurrence(n), listed(n), "p_{n}");
        }
    }

    #[test]
    fn rodrigues_matches_listed_polynomials() {
        for n in 0..=6 {
            assert_eq!(legendre_rodrigues(n), listed(n), "p_{n}");
        }
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(
            legendre_explicit(2, ExplicitFormula::SquaredBinomials),
            listed(2)
        );
        assert_eq!(
            legendre_explicit(0, ExplicitFormula::NegativeUpperBinomial),
            Poly::one()
        );
        assert_eq!(
            legendre_explicit(4, ExplicitFormula::HalfIntegerBinomial),
            listed(4)
        );
        for n in 0..=6 {
            for f in ExplicitFormula::ALL {
                assert_eq!(legendre_explicit(n, f), listed(n), "{f:?} n={n}");
            }
        }
    }

    #[test]
    fn variant_selection() {
        assert_eq!(
            ExplicitFormula::from_variant(2),
            Ok(ExplicitFormula::NegativeUpperBinomial)
        );
        assert_eq!(
            ExplicitFormula::from_variant(0),
            Err(Error::InvalidVariant(0))
        );
        assert_eq!(
            ExplicitFormula::from_variant(4),
            Err(Error::InvalidVariant(4))
        );
        for f in ExplicitFormula::ALL {
            assert_eq!(ExplicitFormula::from_variant(f.variant()), Ok(f));
        }
    }

    #[test]
    fn legendre_de_holds() {
        assert!(check_legendre_de(0));
        assert!(check_legendre_de(2));
        assert!(check_legendre_de(10));
        // p_2 is not a solution for the n = 3 eigenvalue
        assert!(!legendre_de_residual(3, &listed(2)).is_zero());
    }

    #[test]
    fn higher_order_examples() {
        let f1 = higher_order_series(1, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(f1.coeff(n), &legendre_recurrence(n));
        }
        let f2 = higher_order_series(2, 3).unwrap();
        assert_eq!(f2.coeff(2), &Poly::from_ints(&[-1, 0, 4]));
        let f3 = higher_order_series(3, 3).unwrap();
        assert_eq!(f3.coeff(1), &Poly::from_ints(&[0, 3]));
        assert_eq!(higher_order_series(0, 3), Err(Error::NonPositiveAlpha));
    }

    #[test]
    fn higher_order_degrees_and_leading_signs() {
        for alpha in 1..=7 {
            let s = higher_order_series(alpha, 8).unwrap();
            for n in 0..=8 {
                let c = s.coeff(n);
                assert_eq!(c.degree(), Some(n), "alpha={alpha} n={n}");
                assert!(*c.leading_coeff().unwrap() > int(0));
            }
        }
    }
}
