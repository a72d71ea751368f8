//! Exact Legendre polynomials and the nonlinear differential equations satisfied by
//! their generating function.
//!
//! The generating function `F(t, x) = (1 - 2tx + t^2)^{-1/2}` satisfies, for every
//! `N >= 1`,
//!
//! ```text
//! (2N-1)!! F^{2N+1} = sum_{i=1}^{N} a_i(N) F^{(i)} / (x - t)^{2N-i}
//! ```
//!
//! where `F^{(i)}` is the `i`-th `t`-derivative. This crate builds the Legendre
//! polynomials several independent ways, computes the triangle `a_i(N)` by recurrence and
//! by nested-sum closed forms, and checks the hierarchy and the resulting expansion of
//! higher-order Legendre polynomials as exact identities over the rationals.

pub mod arith;
pub mod cli;
pub mod coeffs;
pub mod error;
pub mod legendre;
pub mod poly;
pub mod render;
pub mod report;
pub mod series;
pub mod verify;

pub use arith::Rational;
pub use coeffs::{coeff_closed_form, coeff_closed_form_unrolled, reconcile, CoeffTable};
pub use error::{Error, Result};
pub use legendre::{
    check_legendre_de, higher_order_series, legendre_explicit, legendre_recurrence,
    legendre_rodrigues, ExplicitFormula, Generator,
};
pub use poly::Poly;
pub use report::{IdentityId, VerifyReport};
pub use series::TSeries;
pub use verify::{verify_all, verify_ode_family, verify_theorem2};
