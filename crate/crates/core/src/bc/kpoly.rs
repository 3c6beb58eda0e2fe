use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bc::kvalue::KValue;
use crate::error::{Error, Result};

/// Polynomial in `K[X]`, coefficients listed from degree 0 upward.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct KPoly {
    coeffs: Vec<KValue>,
}

impl KPoly {
    pub fn new(coeffs: Vec<KValue>) -> Self {
        let mut p = KPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        KPoly::default()
    }

    pub fn constant(c: KValue) -> Self {
        KPoly::new(vec![c])
    }

    pub fn one() -> Self {
        KPoly::constant(KValue::one())
    }

    /// `X`.
    pub fn var() -> Self {
        KPoly::new(vec![KValue::Zero, KValue::one()])
    }

    /// `X(X − 1)`.
    pub fn x_x_minus_1() -> Self {
        KPoly::new(vec![KValue::Zero, KValue::one().neg(), KValue::one()])
    }

    /// `X − 1`.
    pub fn x_minus_1() -> Self {
        KPoly::new(vec![KValue::one().neg(), KValue::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(KValue::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[KValue] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> KValue {
        self.coeffs.get(i).cloned().unwrap_or(KValue::Zero)
    }

    pub fn eval_at_zero(&self) -> KValue {
        self.coeff(0)
    }

    pub fn eval_at_one(&self) -> KValue {
        self.coeffs.iter().fold(KValue::Zero, |acc, c| acc.add(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        KPoly::new(self.coeffs.iter().map(KValue::neg).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &KValue) -> Self {
        KPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![KValue::Zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        KPoly::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(KPoly::one(), |acc, _| acc.mul(self))
    }

    /// Long division over the field `K`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(KPoly, KPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.clone();
        let mut quot = vec![KValue::Zero; self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree().filter(|&rd| rd >= dd) {
            let c = rem.coeffs[rd].mul(&lead_inv);
            let shift = rd - dd;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem.coeffs[shift + i] = rem.coeffs[shift + i].sub(&c.mul(b));
            }
            rem.coeffs[rd] = KValue::Zero;
            rem.trim();
            quot[shift] = c;
        }
        Ok((KPoly::new(quot), rem))
    }

    /// `self / divisor` when the division is exact in `K[X]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<KPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Largest `m` with `(X(X − 1))^m` dividing `self`; `None` for zero.
    pub fn x_x_minus_1_multiplicity(&self) -> Option<(u32, KPoly)> {
        if self.is_zero() {
            return None;
        }
        let d = KPoly::x_x_minus_1();
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(&d).expect("nonzero divisor") {
            cur = q;
            m += 1;
        }
        Some((m, cur))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        let parsed = coeffs.iter().map(|s| s.as_ref().parse::<KValue>()).collect::<std::result::Result<_, _>>()?;
        Ok(KPoly::new(parsed))
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains(' ') && !cs.starts_with('(') { format!("({cs})") } else { cs };
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if cs != "1" {
                        write!(f, "{cs}*")?;
                    }
                    if i == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for KPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for KPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        KPoly::from_strings(&v).map_err(serde::de::Error::custom)
    }
}
