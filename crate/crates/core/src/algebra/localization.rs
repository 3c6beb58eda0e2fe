use serde::Serialize;

use super::divide::{divides_in_algebra, Division, ExponentMonoid};
use super::poly::PolyExpr;
use crate::error::{Error, Result};

/// `num / den` in the localization of `F[M]` at `S = {f : f(0) ≠ 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizedElement {
    pub num: PolyExpr,
    pub den: PolyExpr,
}

impl LocalizedElement {
    pub fn new(num: PolyExpr, den: PolyExpr) -> Result<Self> {
        if den.constant_term().is_zero() {
            return Err(Error::PreconditionViolated(format!("denominator {den} is not in S")));
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(LocalizedElement { num, den })
    }

    pub fn from_poly(num: PolyExpr) -> Self {
        let den = PolyExpr::one(num.field());
        LocalizedElement { num, den }
    }

    /// Equality in the fraction field by cross multiplication.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        LocalizedElement::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }
}

/// Units of the localization are the fractions whose numerator lies in `S`.
pub fn is_unit_localized(e: &LocalizedElement) -> bool {
    !e.num.constant_term().is_zero()
}

/// Ring in which consecutive chain quotients are taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainRing {
    /// `F[M]_S`.
    Localized,
    /// `F[M]` itself; denominators must be 1.
    Plain,
}

/// Checks that `(e_i)` generates a strictly ascending chain of principal ideals:
/// each `e_{i+1}` divides `e_i` with a nonunit quotient.
pub fn localization_chain_check(
    chain: &[LocalizedElement],
    exps: &ExponentMonoid,
    ring: ChainRing,
    budget: u64,
) -> Result<bool> {
    if chain.is_empty() {
        return Err(Error::PreconditionViolated("empty chain".into()));
    }
    for pair in chain.windows(2) {
        let (cur, next) = (&pair[0], &pair[1]);
        if next.num.is_zero() {
            return Ok(false);
        }
        match ring {
            ChainRing::Plain => {
                if !cur.den.is_unit() || !next.den.is_unit() {
                    return Ok(false);
                }
                let target = cur.num.mul(&next.den)?;
                let divisor = next.num.mul(&cur.den)?;
                match divides_in_algebra(&divisor, &target, exps, budget)? {
                    Division::Yes { quotient } if !quotient.is_unit() && !quotient.is_zero() => {}
                    _ => return Ok(false),
                }
            }
            ChainRing::Localized => {
                // cur / next = (n_i d_{i+1}) / (d_i n_{i+1}); a polynomial quotient h of
                // n_i d_{i+1} by n_{i+1} gives cur / next = h / d_i.
                let target = cur.num.mul(&next.den)?;
                match divides_in_algebra(&next.num, &target, exps, budget)? {
                    Division::Yes { quotient } => {
                        let q = LocalizedElement::new(quotient, cur.den.clone())?;
                        if is_unit_localized(&q) || q.num.is_zero() {
                            return Ok(false);
                        }
                    }
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}
