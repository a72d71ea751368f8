//! Exact checks of the ODE hierarchy and the higher-order Legendre expansion.
//!
//! Both identities involve negative powers of `(x - t)` or `x`. They are multiplied
//! through by the largest such power first, so every comparison is equality of
//! polynomials (or truncated series of polynomials) over the rationals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial_int, double_factorial, falling_factorial, int, Rational};
use crate::coeffs::CoeffTable;
use crate::error::{Error, Result};
use crate::legendre::{
    generating_function, higher_order_series, legendre_de_residual, legendre_sequence, Generator,
};
use crate::poly::Poly;
use crate::report::{Failure, IdentityId, VerifyReport};
use crate::series::TSeries;

fn odd_double_factorial(n: usize) -> Rational {
    double_factorial(2 * n as i64 - 1).expect("2N-1 >= -1")
}

fn table_entry(table: &CoeffTable, i: usize, n: usize) -> Result<Rational> {
    table
        .get(i, n)
        .map(|a| Rational::from_integer(a.clone()))
        .ok_or(Error::IndexOutOfRange { i, n })
}

/// Check `(2N-1)!! F^{2N+1} (x-t)^{2N-1} = sum_i a_i(N) F^{(i)} (x-t)^{i-1}` through
/// `t^{M-N}`, with the coefficients taken from the recurrence.
pub fn verify_ode_family(n: usize, order: usize) -> Result<VerifyReport> {
    let table = CoeffTable::recurrence(n.max(1))?;
    verify_ode_family_with(&table, n, order)
}

/// As [`verify_ode_family`], reading `a_i(N)` from `table`.
pub fn verify_ode_family_with(table: &CoeffTable, n: usize, order: usize) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    if order < n {
        return Err(Error::OrderBelowN { order, n });
    }
    // F^{(N)} of an order-M truncation is exact only through t^{M-N}.
    let trusted = order - n;
    let f = generating_function(order);

    let lhs = f
        .truncate(trusted)?
        .pow(2 * n as u32 + 1)
        .scale(&odd_double_factorial(n))
        .mul_x_minus_t_pow(2 * n - 1);

    let mut rhs = TSeries::zero(trusted);
    let mut derivative = f;
    for i in 1..=n {
        derivative = derivative.derivative_t()?;
        let term = derivative
            .truncate(trusted)?
            .scale(&table_entry(table, i, n)?)
            .mul_x_minus_t_pow(i - 1);
        rhs = rhs.add(&term)?;
    }

    let failure = lhs.first_difference(&rhs)?.map(Failure::from);
    Ok(VerifyReport::new(
        IdentityId::OdeFamily,
        &[("N", n as i64), ("M", order as i64)],
        failure,
    ))
}

/// Check the explicit expansion of `p_n^{(2N+1)}` after multiplying by `x^{2N+n-1}`:
///
/// `(2N-1)!! x^{2N+n-1} p_n^{(2N+1)} =
///     sum_{i=1}^{N} sum_{m=0}^{n} a_i(N) binom(2N+m-i-1, m) x^{n-1-m+i} p_{n-m+i} (n-m+i)_i`.
///
/// The left side comes from powering the generating function, the right side from the
/// plain Legendre sequence.
pub fn verify_theorem2(n: usize, big_n: usize) -> Result<VerifyReport> {
    let table = CoeffTable::recurrence(big_n.max(1))?;
    verify_theorem2_with(&table, n, big_n)
}

pub fn verify_theorem2_with(table: &CoeffTable, n: usize, big_n: usize) -> Result<VerifyReport> {
    if big_n == 0 {
        return Err(Error::ZeroN);
    }
    let lhs = theorem2_lhs(n, big_n)?;
    let rhs = theorem2_rhs(table, n, big_n)?;
    let failure = lhs
        .first_difference(&rhs)
        .map(|(x_power, lhs, rhs)| Failure {
            t_power: n,
            x_power,
            lhs,
            rhs,
        });
    Ok(VerifyReport::new(
        IdentityId::Theorem2,
        &[("n", n as i64), ("N", big_n as i64)],
        failure,
    ))
}

/// `(2N-1)!! x^{2N+n-1} p_n^{(2N+1)}(x)` via series powering.
pub fn theorem2_lhs(n: usize, big_n: usize) -> Result<Poly> {
    let series = higher_order_series(2 * big_n as u32 + 1, n)?;
    Ok(series
        .coeff(n)
        .shift(2 * big_n + n - 1)
        .scale(&odd_double_factorial(big_n)))
}

/// Right side of the cleared expansion, summed term by term.
pub fn theorem2_rhs(table: &CoeffTable, n: usize, big_n: usize) -> Result<Poly> {
    let ps = legendre_sequence(n + big_n);
    let mut total = Poly::zero();
    for i in 1..=big_n {
        let a = table_entry(table, i, big_n)?;
        for m in 0..=n {
            let binom = binomial_int((2 * big_n + m - i) as i64 - 1, m as u32);
            if binom.is_zero() {
                continue;
            }
            let degree = n - m + i;
            let falling = falling_factorial(&int(degree as i64), i as u32);
            let scalar = &a * Rational::from_integer(binom) * falling;
            total = total + ps[degree].shift(n + i - 1 - m).scale(&scalar);
        }
    }
    Ok(total)
}

pub fn verify_legendre_de(n: usize) -> VerifyReport {
    let p = legendre_sequence(n).pop().expect("non-empty");
    let residual = legendre_de_residual(n, &p);
    let failure = residual
        .first_difference(&Poly::zero())
        .map(|(x_power, lhs, rhs)| Failure {
            t_power: n,
            x_power,
            lhs,
            rhs,
        });
    VerifyReport::new(IdentityId::LegendreDe, &[("n", n as i64)], failure)
}

/// Compare every generator against the recurrence. On a mismatch the report's
/// `generator` parameter is the index into [`Generator::ALL`] of the first offender.
pub fn verify_generator_agreement(n: usize) -> VerifyReport {
    let reference = Generator::Recurrence.build(n);
    let first = Generator::ALL
        .iter()
        .enumerate()
        .skip(1)
        .find_map(|(idx, g)| {
            g.build(n)
                .first_difference(&reference)
                .map(|(x_power, lhs, rhs)| {
                    (
                        idx,
                        Failure {
                            t_power: n,
                            x_power,
                            lhs,
                            rhs,
                        },
                    )
                })
        });
    match first {
        None => VerifyReport::new(IdentityId::GeneratorAgreement, &[("n", n as i64)], None),
        Some((idx, failure)) => VerifyReport::new(
            IdentityId::GeneratorAgreement,
            &[("n", n as i64), ("generator", idx as i64)],
            Some(failure),
        ),
    }
}

/// Full suite: Legendre equation and generator agreement for `n <= n_max`, the ODE
/// family for `N <= big_n_max` at truncation `order`, and the expansion for every
/// `(n, N)` pair. Reports come back in that fixed order.
pub fn verify_all(n_max: usize, big_n_max: usize, order: usize) -> Result<Vec<VerifyReport>> {
    if big_n_max == 0 {
        return Err(Error::ZeroN);
    }
    if order < big_n_max {
        return Err(Error::OrderBelowN {
            order,
            n: big_n_max,
        });
    }
    let table = CoeffTable::recurrence(big_n_max)?;
    let mut reports = Vec::new();
    reports.extend((0..=n_max).map(verify_legendre_de));
    reports.extend((0..=n_max).map(verify_generator_agreement));
    for big_n in 1..=big_n_max {
        reports.push(verify_ode_family_with(&table, big_n, order)?);
    }
    for n in 0..=n_max {
        for big_n in 1..=big_n_max {
            reports.push(verify_theorem2_with(&table, n, big_n)?);
        }
    }
    Ok(reports)
}

/// Perturb `a_i(N)` by `delta`; convenience for mutation checks.
pub fn perturbed(table: &CoeffTable, i: usize, n: usize, delta: i64) -> Result<CoeffTable> {
    let current = table.get(i, n).ok_or(Error::IndexOutOfRange { i, n })?;
    table.with_entry(i, n, current + BigInt::from(delta))
}
