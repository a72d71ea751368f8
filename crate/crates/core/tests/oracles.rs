//! Independent routes to the values the library computes.
//!
//! The higher-order Legendre polynomials are re-derived here from the binomial series
//! `(1 - u)^{-alpha/2} = sum_k binom(-alpha/2, k) (-u)^k` with `u = 2tx - t^2`, which
//! shares nothing with the three-term recurrence or with series powering.

use legendre_ode::arith::{binomial, frac, gamma_half_integer, int, Rational};
use legendre_ode::{
    coeff_closed_form, coeff_closed_form_unrolled, higher_order_series, legendre_recurrence,
    verify_ode_family, CoeffTable, Poly, TSeries,
};
use num_bigint::BigInt;

/// `p_n^{(alpha)}(x)` for `n = 0..=order` by direct binomial expansion.
fn binomial_series_oracle(alpha: i64, order: usize) -> Vec<Poly> {
    let exponent = frac(-alpha, 2);
    (0..=order)
        .map(|n| {
            // t^n collects k + j = n from binom(-alpha/2, k) (-1)^k t^k (2x - t)^k
            let mut coeffs = vec![Rational::from_integer(0.into()); n + 1];
            for k in 0..=n {
                let j = n - k;
                if j > k {
                    continue;
                }
                let sign = if (k + j) % 2 == 0 { 1 } else { -1 };
                let c = binomial(&exponent, k as u32)
                    * binomial(&int(k as i64), j as u32)
                    * int(sign)
                    * int(1i64 << (k - j));
                coeffs[k - j] += c;
            }
            Poly::from_coeffs(coeffs)
        })
        .collect()
}

fn series_of(order: usize, polys: Vec<Poly>) -> TSeries {
    TSeries::new(order, polys)
}

#[test]
fn legendre_sequence_matches_binomial_series() {
    let oracle = binomial_series_oracle(1, 25);
    for (n, p) in oracle.iter().enumerate() {
        assert_eq!(&legendre_recurrence(n), p, "p_{n}");
    }
}

#[test]
fn higher_order_series_matches_binomial_series() {
    for alpha in 1..=9u32 {
        let ours = higher_order_series(alpha, 10).unwrap();
        let oracle = binomial_series_oracle(alpha as i64, 10);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(ours.coeff(n), expected, "alpha={alpha} n={n}");
        }
    }
}

#[test]
fn convolution_examples_by_hand_loops() {
    let p: Vec<Poly> = (0..=2).map(legendre_recurrence).collect();
    // F*F at t^1 = p0 p1 + p1 p0
    let t1 = &p[0] * &p[1] + &p[1] * &p[0];
    assert_eq!(t1, Poly::from_ints(&[0, 2]));
    // F*F at t^2 = p0 p2 + p1 p1 + p2 p0
    let t2 = &p[0] * &p[2] + &p[1] * &p[1] + &p[2] * &p[0];
    assert_eq!(t2, Poly::from_ints(&[-1, 0, 4]));
    // F^3 at t^1: all (a, b, c) with a + b + c = 1
    let mut t1_cubed = Poly::zero();
    for a in 0..=1usize {
        for b in 0..=1 - a {
            let c = 1 - a - b;
            t1_cubed = t1_cubed + &(&p[a] * &p[b]) * &p[c];
        }
    }
    assert_eq!(t1_cubed, Poly::from_ints(&[0, 3]));

    let f = series_of(2, p.clone());
    assert_eq!(f.mul(&f).unwrap().coeff(1), &Poly::from_ints(&[0, 2]));
    assert_eq!(f.pow(2).coeff(2), &Poly::from_ints(&[-1, 0, 4]));
    assert_eq!(f.pow(3).coeff(1), &Poly::from_ints(&[0, 3]));
}

#[test]
fn derivative_examples_against_falling_factorials() {
    let f = series_of(4, binomial_series_oracle(1, 4));
    let d1 = f.derivative_t().unwrap();
    assert_eq!(d1.coeff(0), &Poly::x());
    let d2 = d1.derivative_t().unwrap();
    assert_eq!(d2.coeff(0), &Poly::from_ints(&[-1, 0, 3]));
}

#[test]
fn gamma_coefficient_by_recurrence() {
    // Gamma(z + 1) = z Gamma(z), starting from Gamma(1/2) = sqrt(pi)
    let mut by_recurrence = int(1);
    for n in 0..30u32 {
        assert_eq!(gamma_half_integer(n), by_recurrence, "n={n}");
        by_recurrence *= frac(2 * n as i64 + 1, 2);
    }
}

#[test]
fn closed_forms_reproduce_triangle_to_twenty() {
    let table = CoeffTable::recurrence(20).unwrap();
    for n in 1..=20 {
        for i in 1..=n {
            let expected = table.get(i, n).unwrap();
            assert_eq!(
                &coeff_closed_form(i, n).unwrap(),
                expected,
                "direct a_{i}({n})"
            );
            assert_eq!(
                &coeff_closed_form_unrolled(i, n).unwrap(),
                expected,
                "unrolled a_{i}({n})"
            );
        }
    }
}

#[test]
fn printed_hierarchy_rows() {
    let table = CoeffTable::recurrence(4).unwrap();
    let rows: Vec<Vec<BigInt>> = table.rows().to_vec();
    let as_ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(rows[0], as_ints(&[1]));
    assert_eq!(rows[1], as_ints(&[1, 1]));
    assert_eq!(rows[2], as_ints(&[3, 3, 1]));
    assert_eq!(rows[3], as_ints(&[15, 15, 6, 1]));
}

/// `3 F^5 (x-t)^3 = F' + (x-t) F''` from the oracle series alone.
#[test]
fn second_hierarchy_member_on_oracle_series() {
    let order = 10;
    let f = series_of(order, binomial_series_oracle(1, order));
    let trusted = order - 2;
    let lhs = f
        .truncate(trusted)
        .unwrap()
        .pow(5)
        .scale(&int(3))
        .mul_x_minus_t_pow(3);
    let d1 = f.derivative_t().unwrap();
    let d2 = d1.derivative_t().unwrap();
    let rhs = d1
        .truncate(trusted)
        .unwrap()
        .add(&d2.mul_x_minus_t_pow(1))
        .unwrap();
    assert_eq!(lhs, rhs);
    assert!(verify_ode_family(2, order).unwrap().passed);
}
