//! The coefficient triangle `a_i(N)` of the hierarchy
//! `(2N-1)!! F^{2N+1} = sum_{i=1}^{N} a_i(N) F^{(i)} / (x-t)^{2N-i}`.
//!
//! [`CoeffTable::recurrence`] is the ground truth. The nested-sum closed forms are
//! evaluated independently and compared against it by [`reconcile`].

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::arith::{positive_double_factorial, step_two_product};
use crate::error::{Error, Result};

/// Rows `N = 1..=n_max`, row `N` holding `a_1(N), ..., a_N(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    rows: Vec<Vec<BigInt>>,
}

impl CoeffTable {
    /// Fill the triangle from `a_1(1) = 1` and
    /// `a_1(N+1) = (2N-1) a_1(N)`, `a_{N+1}(N+1) = a_N(N)`,
    /// `a_i(N+1) = (2N-i) a_i(N) + a_{i-1}(N)` for `2 <= i <= N`.
    pub fn recurrence(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::ZeroN);
        }
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..n_max {
            let prev = &rows[n - 1];
            let two_n = 2 * n as i64;
            let mut row = Vec::with_capacity(n + 1);
            row.push(&prev[0] * (two_n - 1));
            for i in 2..=n {
                row.push(&prev[i - 1] * (two_n - i as i64) + &prev[i - 2]);
            }
            row.push(prev[n - 1].clone());
            rows.push(row);
        }
        Ok(CoeffTable { rows })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Row `N` (1-based); panics outside `1..=n_max`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    /// `a_i(N)`, or `None` outside the triangle.
    pub fn get(&self, i: usize, n: usize) -> Option<&BigInt> {
        if i == 0 || n == 0 {
            return None;
        }
        self.rows.get(n - 1).and_then(|row| row.get(i - 1))
    }

    /// Copy of the table with one entry replaced. Used for mutation testing, so the
    /// result need not satisfy the table invariants.
    pub fn with_entry(&self, i: usize, n: usize, value: BigInt) -> Result<Self> {
        if self.get(i, n).is_none() {
            return Err(Error::IndexOutOfRange { i, n });
        }
        let mut out = self.clone();
        out.rows[n - 1][i - 1] = value;
        Ok(out)
    }
}

/// Which printed closed form is being evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// The form indexed by the row `N` itself.
    Direct,
    /// The preceding display, which expresses row `N+1` through sums over row-`N` quantities.
    Unrolled,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 2] = [ClosedForm::Direct, ClosedForm::Unrolled];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Direct => "direct",
            ClosedForm::Unrolled => "unrolled",
        }
    }
}

/// Constants of one nested-sum display for a fixed `(i, N)`.
///
/// At depth `k` (1-based) with `L = l_1 + ... + l_{k-1}` already fixed:
/// the angle bracket is `<top - k - 2L>_{l_k}`, `l_k` runs over `0..=limit - L`, the
/// closing product is `prod_{l_k=0}^{limit-L} (top - k - 2L - 2 l_k)`, and after `i-1`
/// sums the tail factor is `(tail - 2L)!!`.
#[derive(Clone, Copy, Debug)]
struct Layout {
    depth: usize,
    top: i64,
    limit: i64,
    tail: i64,
}

impl Layout {
    /// Constants of the row-indexed form of `a_i(N)`.
    fn direct(i: usize, n: usize) -> Self {
        let (i, n) = (i as i64, n as i64);
        Layout {
            depth: i as usize - 1,
            top: 2 * n - i - 1,
            limit: n - i - 1,
            tail: 2 * (n - i) - 1,
        }
    }

    /// Constants read off the display for `a_i(M+1)` with `M = N - 1`.
    fn unrolled(i: usize, n: usize) -> Self {
        let (i, m) = (i as i64, n as i64 - 1);
        Layout {
            depth: i as usize - 1,
            top: 2 * m - i + 1,
            limit: m - i,
            tail: 2 * (m - i) + 1,
        }
    }

    fn evaluate(&self) -> BigInt {
        self.walk(1, 0, &BigInt::one())
    }

    /// Contribution of every term whose innermost sum sits at depth `>= k`.
    fn walk(&self, k: usize, spent: i64, prefix: &BigInt) -> BigInt {
        if k > self.depth {
            return prefix * positive_double_factorial(self.tail - 2 * spent);
        }
        let base = self.top - k as i64 - 2 * spent;
        let span = self.limit - spent;
        let closing = step_two_product(base, u32::try_from(span + 1).unwrap_or(0));
        let mut total = prefix * closing;
        for l in 0..=span {
            let bracket = step_two_product(base, l as u32);
            total += self.walk(k + 1, spent + l, &(prefix * bracket));
        }
        total
    }
}

fn closed_form(form: ClosedForm, i: usize, n: usize) -> Result<BigInt> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { i, n });
    }
    if i == 1 {
        // (2N-3)!!, with (-1)!! = 1 covering N = 1
        return Ok(positive_double_factorial(2 * n as i64 - 3));
    }
    if i == n {
        return Ok(BigInt::one());
    }
    let layout = match form {
        ClosedForm::Direct => Layout::direct(i, n),
        ClosedForm::Unrolled => Layout::unrolled(i, n),
    };
    Ok(layout.evaluate())
}

/// `a_i(N)` from the nested-sum statement indexed by `N`.
pub fn coeff_closed_form(i: usize, n: usize) -> Result<BigInt> {
    closed_form(ClosedForm::Direct, i, n)
}

/// `a_i(N)` from the display written for row `N+1` (evaluated at `N-1`).
pub fn coeff_closed_form_unrolled(i: usize, n: usize) -> Result<BigInt> {
    closed_form(ClosedForm::Unrolled, i, n)
}

pub fn coeff_closed_form_by(form: ClosedForm, i: usize, n: usize) -> Result<BigInt> {
    closed_form(form, i, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub form: ClosedForm,
    pub i: usize,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(serialize_with = "crate::report::bigint_string")]
    pub recurrence: BigInt,
    #[serde(serialize_with = "crate::report::bigint_string")]
    pub closed_form: BigInt,
}

/// Outcome of comparing both closed forms to the recurrence over a whole table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reconciliation {
    #[serde(rename = "N_max")]
    pub n_max: usize,
    /// Number of `(form, i, N)` evaluations compared.
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Reconciliation {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn reconcile(table: &CoeffTable) -> Reconciliation {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for form in ClosedForm::ALL {
        for n in 1..=table.n_max() {
            for i in 1..=n {
                let recurrence = table.get(i, n).expect("inside triangle").clone();
                let closed = closed_form(form, i, n).expect("inside triangle");
                checked += 1;
                if closed != recurrence {
                    mismatches.push(Mismatch {
                        form,
                        i,
                        n,
                        recurrence,
                        closed_form: closed,
                    });
                }
            }
        }
    }
    Reconciliation {
        n_max: table.n_max(),
        checked,
        mismatches,
    }
}
