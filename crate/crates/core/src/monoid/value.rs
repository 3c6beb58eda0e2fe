use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::exact::Rational;

/// An element of one of the supported monoids.
///
/// * `Puiseux(q)`: a nonnegative rational.
/// * `RankTwo { beta, q }`: the formal sum `beta·β + q` with `β` transcendental.
/// * `IntVec`: an integer exponent vector.
///
/// The derived order compares values within a tag: Puiseux by value, rank-two
/// lexicographically on `(beta, q)` (β dominates every rational), vectors lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidValue {
    Puiseux(Rational),
    RankTwo { beta: u64, q: Rational },
    IntVec(Vec<i64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueTag {
    Puiseux,
    RankTwo,
    IntVec,
}

impl MonoidValue {
    pub fn q(num: i64, den: i64) -> Self {
        MonoidValue::Puiseux(Rational::new(num, den))
    }

    pub fn rank_two(beta: u64, q: Rational) -> Self {
        MonoidValue::RankTwo { beta, q }
    }

    pub fn tag(&self) -> ValueTag {
        match self {
            MonoidValue::Puiseux(_) => ValueTag::Puiseux,
            MonoidValue::RankTwo { .. } => ValueTag::RankTwo,
            MonoidValue::IntVec(_) => ValueTag::IntVec,
        }
    }

    /// The identity element with the same tag (and vector length).
    pub fn zero_like(&self) -> Self {
        match self {
            MonoidValue::Puiseux(_) => MonoidValue::Puiseux(Rational::zero()),
            MonoidValue::RankTwo { .. } => MonoidValue::RankTwo { beta: 0, q: Rational::zero() },
            MonoidValue::IntVec(v) => MonoidValue::IntVec(vec![0; v.len()]),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            MonoidValue::Puiseux(q) => q.is_zero(),
            MonoidValue::RankTwo { beta, q } => *beta == 0 && q.is_zero(),
            MonoidValue::IntVec(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            MonoidValue::Puiseux(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_vec(&self) -> Option<&[i64]> {
        match self {
            MonoidValue::IntVec(v) => Some(v),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (MonoidValue::Puiseux(a), MonoidValue::Puiseux(b)) => Ok(MonoidValue::Puiseux(a + b)),
            (MonoidValue::RankTwo { beta: a, q: p }, MonoidValue::RankTwo { beta: b, q }) => {
                Ok(MonoidValue::RankTwo { beta: a + b, q: p + q })
            }
            (MonoidValue::IntVec(a), MonoidValue::IntVec(b)) if a.len() == b.len() => {
                Ok(MonoidValue::IntVec(a.iter().zip(b).map(|(x, y)| x + y).collect()))
            }
            _ => Err(Error::TagMismatch),
        }
    }

    /// `self − other`, or `None` when the difference leaves the admissible carrier
    /// (a negative rational, or a negative β-coefficient).
    pub fn try_sub(&self, other: &Self) -> Result<Option<Self>> {
        match (self, other) {
            (MonoidValue::Puiseux(a), MonoidValue::Puiseux(b)) => {
                let d = a - b;
                Ok((!d.is_negative()).then_some(MonoidValue::Puiseux(d)))
            }
            (MonoidValue::RankTwo { beta: a, q: p }, MonoidValue::RankTwo { beta: b, q }) => {
                Ok(a.checked_sub(*b).map(|beta| MonoidValue::RankTwo { beta, q: p - q }))
            }
            (MonoidValue::IntVec(a), MonoidValue::IntVec(b)) if a.len() == b.len() => {
                Ok(Some(MonoidValue::IntVec(a.iter().zip(b).map(|(x, y)| x - y).collect())))
            }
            _ => Err(Error::TagMismatch),
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        match self {
            MonoidValue::Puiseux(q) => MonoidValue::Puiseux(q.scale(k as i64)),
            MonoidValue::RankTwo { beta, q } => {
                MonoidValue::RankTwo { beta: beta * k, q: q.scale(k as i64) }
            }
            MonoidValue::IntVec(v) => MonoidValue::IntVec(v.iter().map(|x| x * k as i64).collect()),
        }
    }

    /// Carrier invariant: Puiseux values are nonnegative.
    pub fn is_admissible(&self) -> bool {
        match self {
            MonoidValue::Puiseux(q) => !q.is_negative(),
            _ => true,
        }
    }
}

impl fmt::Display for MonoidValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidValue::Puiseux(q) => write!(f, "{q}"),
            MonoidValue::RankTwo { beta, q } => write!(f, "{beta}*b+{q}"),
            MonoidValue::IntVec(v) => {
                write!(f, "[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Debug for MonoidValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MonoidValue {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::Value(s.to_string());
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?;
            if inner.trim().is_empty() {
                return Ok(MonoidValue::IntVec(Vec::new()));
            }
            let entries = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            return Ok(MonoidValue::IntVec(entries));
        }
        if let Some((b, rest)) = s.split_once("*b") {
            let beta = b.trim().parse::<u64>().map_err(|_| bad())?;
            let rest = rest.trim();
            let q = if rest.is_empty() {
                Rational::zero()
            } else if let Some(r) = rest.strip_prefix('+') {
                r.parse::<Rational>().map_err(|_| bad())?
            } else if rest.starts_with('-') {
                rest.parse::<Rational>().map_err(|_| bad())?
            } else {
                return Err(bad());
            };
            return Ok(MonoidValue::RankTwo { beta, q });
        }
        let q = s.parse::<Rational>().map_err(|_| bad())?;
        if q.is_negative() {
            return Err(bad());
        }
        Ok(MonoidValue::Puiseux(q))
    }
}

impl Serialize for MonoidValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MonoidValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
