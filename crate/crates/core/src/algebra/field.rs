use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::exact::{is_prime_u64, Rational};

/// Coefficient field of a monoid algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidPresentation(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Canonical representative: the rational itself, or its residue in `0..p`.
    pub fn normalize(&self, c: &Rational) -> Result<Rational> {
        match self {
            FieldSpec::Rationals => Ok(c.clone()),
            FieldSpec::Prime(p) => c
                .residue_mod(*p)
                .map(|r| Rational::integer(r as i64))
                .ok_or(Error::ZeroDenominator),
        }
    }

    pub fn from_integer(&self, n: i64) -> Rational {
        match self {
            FieldSpec::Rationals => Rational::integer(n),
            FieldSpec::Prime(p) => Rational::integer(n.mod_floor(&(*p as i64))),
        }
    }

    pub fn add(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(a * b)
    }

    pub fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        match self {
            FieldSpec::Rationals => Ok(a.recip()),
            FieldSpec::Prime(_) => self.normalize(&a.recip()),
        }
    }

    pub fn div(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Reduction of an integral combination of already-normalized elements.
    fn reduce(&self, c: Rational) -> Rational {
        match self {
            FieldSpec::Rationals => c,
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                if c.is_integer() {
                    Rational::from_bigs(c.numer().mod_floor(&pb), BigInt::from(1))
                } else {
                    self.normalize(&c).expect("normalized operands")
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::Poly(format!("unknown field {s:?}"));
        if s.eq_ignore_ascii_case("qq") || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("GF"))
            .ok_or_else(bad)?;
        let p: u64 = inner.trim().parse().map_err(|_| bad())?;
        FieldSpec::prime(p).map_err(|_| bad())
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
