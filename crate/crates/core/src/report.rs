//! Verification outcome records and their exact-string serialization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;
use crate::series::CoeffMismatch;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "ODE_FAMILY")]
    OdeFamily,
    #[serde(rename = "THEOREM_2")]
    Theorem2,
    #[serde(rename = "LEGENDRE_DE")]
    LegendreDe,
    #[serde(rename = "GENERATOR_AGREEMENT")]
    GeneratorAgreement,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::OdeFamily => "ODE_FAMILY",
            IdentityId::Theorem2 => "THEOREM_2",
            IdentityId::LegendreDe => "LEGENDRE_DE",
            IdentityId::GeneratorAgreement => "GENERATOR_AGREEMENT",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First coefficient at which the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub t_power: usize,
    pub x_power: usize,
    #[serde(with = "rational_string")]
    pub lhs: Rational,
    #[serde(with = "rational_string")]
    pub rhs: Rational,
}

impl From<CoeffMismatch> for Failure {
    fn from(m: CoeffMismatch) -> Self {
        Failure {
            t_power: m.t_power,
            x_power: m.x_power,
            lhs: m.lhs,
            rhs: m.rhs,
        }
    }
}

/// One identity check. `passed` is true exactly when `first_failure` is absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity_id: IdentityId,
    pub params: BTreeMap<String, i64>,
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

impl VerifyReport {
    pub fn new(
        identity_id: IdentityId,
        params: &[(&str, i64)],
        first_failure: Option<Failure>,
    ) -> Self {
        VerifyReport {
            identity_id,
            params: params.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            passed: first_failure.is_none(),
            first_failure,
        }
    }

    /// `N=3 M=12` style parameter listing in key order.
    pub fn params_label(&self, sep: &str) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

pub(crate) mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn bigint_string<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}
