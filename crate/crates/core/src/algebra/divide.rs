use serde::Serialize;

use super::poly::PolyExpr;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::monoid::{Budget, Kernel, MonoidValue};

/// Exponent monoid used to decide whether a quotient term is allowed.
pub enum ExponentMonoid<'a> {
    Naturals,
    NonnegRationals,
    Presented(&'a Kernel),
}

impl ExponentMonoid<'_> {
    pub fn contains(&self, e: &MonoidValue) -> Result<bool> {
        match (self, e) {
            (ExponentMonoid::Naturals, MonoidValue::Puiseux(q)) => Ok(q.is_integer() && !q.is_negative()),
            (ExponentMonoid::NonnegRationals, MonoidValue::Puiseux(q)) => Ok(!q.is_negative()),
            (ExponentMonoid::Presented(k), v) => k.member_best(v),
            _ => Err(Error::TagMismatch),
        }
    }

    /// `a | b` in the exponent monoid.
    pub fn divides(&self, a: &MonoidValue, b: &MonoidValue) -> Result<bool> {
        match b.try_sub(a)? {
            Some(d) => self.contains(&d),
            None => Ok(false),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Division {
    /// `g = f · h`.
    Yes { quotient: PolyExpr },
    /// Leading-term elimination forced a term outside the exponent monoid.
    No { reason: String },
    Unknown { reason: String },
}

impl Division {
    pub fn quotient(&self) -> Option<&PolyExpr> {
        match self {
            Division::Yes { quotient } => Some(quotient),
            _ => None,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Division::Yes { .. })
    }
}

/// Decides `f | g` by leading-term elimination.
///
/// Each quotient term is forced, so the first forbidden exponent certifies `No`.
pub fn divides_in_algebra(f: &PolyExpr, g: &PolyExpr, exps: &ExponentMonoid, budget: u64) -> Result<Division> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    let field = f.field();
    if g.is_zero() {
        return Ok(Division::Yes { quotient: PolyExpr::zero(field) });
    }
    let (fd, fc) = f.leading().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
    let f_ord = f.ord().expect("nonzero").clone();
    let g_ord = g.ord().expect("nonzero").clone();
    let floor = match g_ord.try_sub(&f_ord)? {
        Some(d) => d,
        None => return Ok(Division::No { reason: format!("ord g = {g_ord} is below ord f = {f_ord}") }),
    };
    let mut meter = Budget::new(budget);
    let mut rem = g.clone();
    let mut quotient = PolyExpr::zero(field);
    while let Some((rd, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
        if meter.tick().is_err() {
            return Ok(Division::Unknown { reason: format!("elimination exceeded {budget} steps") });
        }
        let Some(e) = rd.try_sub(&fd)? else {
            return Ok(Division::No { reason: format!("remainder term X^{{{rd}}} lies below deg f = {fd}") });
        };
        if e < floor {
            return Ok(Division::No { reason: format!("forced quotient exponent {e} is below {floor}") });
        }
        match exps.contains(&e) {
            Ok(true) => {}
            Ok(false) => return Ok(Division::No { reason: format!("forced quotient exponent {e} is not in the monoid") }),
            Err(Error::BudgetExhausted(n)) => {
                return Ok(Division::Unknown { reason: format!("membership of {e} exceeded budget {n}") })
            }
            Err(err) => return Err(err),
        }
        let c = field.div(&rc, &fc)?;
        quotient = quotient.add(&PolyExpr::monomial(field, e.clone(), c.clone())?)?;
        rem = rem.sub(&f.mul_term(&e, &c)?)?;
    }
    debug_assert_eq!(f.mul(&quotient)?, *g);
    Ok(Division::Yes { quotient })
}

/// Outcome of the difference trick on a pair of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CommonDivisors {
    /// Every common divisor divides this nonzero constant, hence is a unit.
    UnitsOnly { constant: Rational },
    /// A nonunit divides both.
    SharedNonunit { divisor: PolyExpr },
    Undetermined,
}

impl CommonDivisors {
    pub fn units_only(&self) -> bool {
        matches!(self, CommonDivisors::UnitsOnly { .. })
    }
}

/// Whether every common divisor of `f` and `g` is a unit.
pub fn common_divisor_units_only(f: &PolyExpr, g: &PolyExpr, exps: &ExponentMonoid, budget: u64) -> Result<CommonDivisors> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lf = f.leading().expect("nonzero").1.clone();
    let lg = g.leading().expect("nonzero").1.clone();
    let r = g.scale(&lf)?.sub(&f.scale(&lg)?)?;
    if r.is_unit() {
        return Ok(CommonDivisors::UnitsOnly { constant: r.constant_term() });
    }
    for (a, b) in [(f, g), (g, f)] {
        if !a.is_unit() && divides_in_algebra(a, b, exps, budget)?.is_yes() {
            return Ok(CommonDivisors::SharedNonunit { divisor: a.clone() });
        }
    }
    Ok(CommonDivisors::Undetermined)
}

/// `b₀ = min{m ∈ supp f : m > 0, m | m_j}`, falling back to `m_j`.
pub fn min_support_divisor(f: &PolyExpr, m_j: &MonoidValue, exps: &ExponentMonoid) -> Result<MonoidValue> {
    if !f.terms().contains_key(m_j) {
        return Err(Error::EmptyCandidateSet);
    }
    for m in f.support() {
        if !m.is_zero() && exps.divides(m, m_j)? {
            return Ok(m.clone());
        }
    }
    Ok(m_j.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Presentation;

    fn p(s: &str) -> PolyExpr {
        s.parse().unwrap()
    }

    #[test]
    fn division_examples() {
        let d = divides_in_algebra(&p("X - 1"), &p("X^{2} - 1"), &ExponentMonoid::Naturals, 1000).unwrap();
        assert_eq!(d.quotient(), Some(&p("X + 1")));
        let d = divides_in_algebra(&p("X^{1/3} - 1"), &p("X - 1"), &ExponentMonoid::NonnegRationals, 1000).unwrap();
        assert_eq!(d.quotient(), Some(&p("X^{2/3} + X^{1/3} + 1")));
        let d = divides_in_algebra(&p("X^{1/2}"), &p("X^{1/3}"), &ExponentMonoid::NonnegRationals, 1000).unwrap();
        assert!(matches!(d, Division::No { .. }));
        let d = divides_in_algebra(&p("X + 1"), &p("X^{2} + 1"), &ExponentMonoid::Naturals, 1000).unwrap();
        assert!(matches!(d, Division::No { .. }));
        assert!(divides_in_algebra(&PolyExpr::zero(crate::algebra::FieldSpec::Rationals), &p("X"), &ExponentMonoid::Naturals, 10).is_err());
    }

    #[test]
    fn division_respects_presented_exponents() {
        let k = Kernel::new(&Presentation::grams(3)).unwrap();
        let exps = ExponentMonoid::Presented(&k);
        assert!(divides_in_algebra(&p("X^{1/6}"), &p("X^{1/3}"), &exps, 100).unwrap().is_yes());
        assert!(!divides_in_algebra(&p("X^{1/2}"), &p("X^{11/18}"), &exps, 100).unwrap().is_yes());
    }

    #[test]
    fn difference_trick() {
        let n = &ExponentMonoid::Naturals;
        assert_eq!(
            common_divisor_units_only(&p("X - 1"), &p("X + 1"), n, 100).unwrap(),
            CommonDivisors::UnitsOnly { constant: Rational::integer(2) }
        );
        assert!(!common_divisor_units_only(&p("X + 3"), &p("X + 3"), n, 100).unwrap().units_only());
        assert!(matches!(
            common_divisor_units_only(&p("X - 1"), &p("X^{2} - 1"), n, 100).unwrap(),
            CommonDivisors::SharedNonunit { .. }
        ));
    }

    #[test]
    fn b0_examples() {
        let k = Kernel::new(&Presentation::grams(3)).unwrap();
        let exps = ExponentMonoid::Presented(&k);
        let m = MonoidValue::q(1, 6);
        assert_eq!(min_support_divisor(&p("X^{1/6} + X^{1/2}"), &m, &exps).unwrap(), m);
        assert_eq!(min_support_divisor(&p("X^{1/6}"), &m, &exps).unwrap(), m);
        assert_eq!(min_support_divisor(&p("1 + X^{1/6}"), &m, &exps).unwrap(), m);
        assert!(min_support_divisor(&p("1"), &m, &exps).is_err());
    }
}
