use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::localization::{is_unit_localized, LocalizedElement};
use super::poly::PolyExpr;
use crate::decompose::mu;
use crate::error::{Error, Result};
use crate::exact::rational::denom_unsigned;
use crate::exact::Rational;
use crate::monoid::{MonoidValue, Presentation};

/// `X^q · u` with `u` a unit on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionForm {
    pub q: Rational,
    /// Both cofactors `f_i / X^q` have a nonzero constant term.
    pub is_unit_pair: bool,
}

fn shift_down(f: &PolyExpr, q: &Rational) -> Result<PolyExpr> {
    PolyExpr::from_terms(
        f.field(),
        f.terms().iter().map(|(e, c)| {
            let r = e.as_rational().expect("puiseux exponent");
            (MonoidValue::Puiseux(r - q), c.clone())
        }),
    )
}

/// Normal form of an element of `L₁ ∩ L₂` given by one representative per side.
pub fn intersection_normal_form(
    side1: &Presentation,
    e1: &LocalizedElement,
    side2: &Presentation,
    e2: &LocalizedElement,
) -> Result<IntersectionForm> {
    if !e1.same_as(e2)? {
        return Err(Error::PreconditionViolated("representatives differ".into()));
    }
    let left = mu(side1, &e1.num)?;
    let right = mu(side2, &e2.num)?;
    if left != right {
        return Err(Error::MuMismatch { left: left.to_string(), right: right.to_string() });
    }
    let c1 = shift_down(&e1.num, &left)?;
    let c2 = shift_down(&e2.num, &left)?;
    let is_unit_pair = !c1.constant_term().is_zero() && !c2.constant_term().is_zero();
    Ok(IntersectionForm { q: left, is_unit_pair })
}

/// Membership in `⟨1/2^n : n ∈ ℕ⟩`.
pub fn in_dyadic_monoid(q: &Rational) -> bool {
    if q.is_negative() {
        return false;
    }
    let d = denom_unsigned(q);
    (&d & (&d - BigUint::one())) == BigUint::from(0u32)
}

/// `q = q/2 + q/2` in `M° = ⟨1/2^n⟩ ∖ {0}`.
pub fn antimatter_split(q: &Rational) -> Result<(Rational, Rational)> {
    if q.is_zero() || !in_dyadic_monoid(q) {
        return Err(Error::NotAMember(q.to_string()));
    }
    let h = q.half();
    debug_assert!(in_dyadic_monoid(&h));
    Ok((h.clone(), h))
}

/// The factors `X^{q/2}` and `X^{q/2} u` of `h = X^q u`, both checked to be nonunits
/// and to multiply back to `h`.
pub fn antimatter_factors(h: &LocalizedElement, form: &IntersectionForm) -> Result<(LocalizedElement, LocalizedElement)> {
    let (a, b) = antimatter_split(&form.q)?;
    let field = h.num.field();
    let first = LocalizedElement::from_poly(PolyExpr::x_pow(field, a.clone()));
    let unit_part = LocalizedElement::new(shift_down(&h.num, &form.q)?, h.den.clone())?;
    let second = LocalizedElement::new(unit_part.num.mul(&PolyExpr::x_pow(field, b))?, unit_part.den)?;
    if is_unit_localized(&first) || is_unit_localized(&second) || !first.mul(&second)?.same_as(h)? {
        return Err(Error::PreconditionViolated("split does not factor the element".into()));
    }
    Ok((first, second))
}
