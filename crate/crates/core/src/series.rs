//! Power series in `t` truncated at a fixed order, with polynomial-in-`x` coefficients.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial_int, sign_of_power, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// `sum_{n=0}^{order} c_n(x) t^n + O(t^{order+1})`.
///
/// Always holds exactly `order + 1` coefficient slots. Binary operations insist on equal
/// orders; mixing truncations silently is how false identities get "verified".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<Poly>,
}

/// Position of the first coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMismatch {
    pub t_power: usize,
    pub x_power: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl TSeries {
    /// Build from leading coefficients; missing slots are zero, extra ones are dropped.
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        TSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: Poly) -> Self {
        Self::new(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Poly::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &TSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TSeries) -> Result<TSeries> {
        self.check_order(other)?;
        Ok(TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TSeries) -> Result<TSeries> {
        self.check_order(other)?;
        Ok(TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &TSeries) -> Result<TSeries> {
        self.check_order(other)?;
        let order = self.order();
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(Poly::zero(), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a * b
                    }
                })
            })
            .collect();
        Ok(TSeries { coeffs })
    }

    /// `self^k` by binary powering; `k = 0` gives the unit series.
    pub fn pow(&self, k: u32) -> TSeries {
        let mut result = TSeries::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("orders agree");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders agree");
            }
        }
        result
    }

    /// `d/dt`, lowering the order by one: coefficient `n` becomes `(n+1) c_{n+1}`.
    pub fn derivative_t(&self) -> Result<TSeries> {
        if self.order() == 0 {
            return Err(Error::DerivativeOfConstantOrder);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale(&Rational::from_integer(BigInt::from(n))))
            .collect();
        Ok(TSeries { coeffs })
    }

    /// `i`-fold `d/dt`.
    pub fn nth_derivative_t(&self, i: usize) -> Result<TSeries> {
        (0..i).try_fold(self.clone(), |s, _| s.derivative_t())
    }

    /// Multiply by `(x - t)^k`, keeping the truncation order.
    pub fn mul_x_minus_t_pow(&self, k: usize) -> TSeries {
        // (x - t)^k = sum_j binom(k, j) (-1)^j x^{k-j} t^j
        let factors: Vec<Poly> = (0..=k.min(self.order()))
            .map(|j| {
                let c = binomial_int(k as i64, j as u32) * sign_of_power(j);
                Poly::monomial(Rational::from_integer(c), k - j)
            })
            .collect();
        let coeffs = (0..=self.order())
            .map(|n| {
                factors
                    .iter()
                    .enumerate()
                    .take(n + 1)
                    .fold(Poly::zero(), |acc, (j, f)| acc + f * &self.coeffs[n - j])
            })
            .collect();
        TSeries { coeffs }
    }

    /// Drop every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<TSeries> {
        if order > self.order() {
            return Err(Error::TruncationAboveOrder {
                have: self.order(),
                want: order,
            });
        }
        Ok(TSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// First differing `(t, x)` coefficient pair, scanning `t` then `x` ascending.
    pub fn first_difference(&self, other: &TSeries) -> Result<Option<CoeffMismatch>> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find_map(|(n, (a, b))| {
                a.first_difference(b).map(|(k, lhs, rhs)| CoeffMismatch {
                    t_power: n,
                    x_power: k,
                    lhs,
                    rhs,
                })
            }))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Series whose `t^n` coefficients are the given rationals (constant in `x`).
    pub fn from_scalars(order: usize, values: &[Rational]) -> TSeries {
        TSeries::new(
            order,
            values
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        Poly::zero()
                    } else {
                        Poly::constant(v.clone())
                    }
                })
                .collect(),
        )
    }
}
