use serde::Serialize;

use crate::bc::kpoly::KPoly;
use crate::bc::kvalue::{in_d, in_d1, in_d2, KValue};
use crate::error::{Error, Result};

/// `g(0) ∈ D₁` and `g(1) ∈ D₂`.
pub fn in_r(g: &KPoly) -> bool {
    in_d1(&g.eval_at_zero()) && in_d2(&g.eval_at_one())
}

/// Units of `R` are the constants in `D^×`.
pub fn is_unit_r(g: &KPoly) -> bool {
    if g.degree() != Some(0) {
        return false;
    }
    let c = g.coeff(0);
    let inv = c.inv().expect("nonzero constant");
    in_d(&c) && in_d(&inv) && in_r(g) && in_r(&KPoly::constant(inv))
}

/// ACCP predicate on `R`: fails exactly when `f(0) = f(1) = 0`.
pub fn accp_element_bc(f: &KPoly) -> Result<bool> {
    if !in_r(f) {
        return Err(Error::NotInR);
    }
    Ok(!(f.eval_at_zero().is_zero() && f.eval_at_one().is_zero()))
}

/// One term `f / c^n` of a divisor chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub index: u32,
    pub term: KPoly,
    pub in_r: bool,
}

/// Terms `f / c^n` for `n ≤ len`, each checked for membership in `R`.
pub fn chain_by(f: &KPoly, c: &KValue, len: u32) -> Result<Vec<ChainStep>> {
    if !in_r(f) {
        return Err(Error::NotInR);
    }
    let inv = c.inv()?;
    let mut term = f.clone();
    let mut out = Vec::new();
    for index in 0..=len {
        out.push(ChainStep { index, in_r: in_r(&term), term: term.clone() });
        term = term.scale(&inv);
    }
    Ok(out)
}

/// The chain `(f / x^n)_{n ≤ len}` attached to an `f` with `f(0) = f(1) = 0`.
pub fn ascending_chain_by_x(f: &KPoly, len: u32) -> Result<Vec<ChainStep>> {
    if accp_element_bc(f)? {
        return Err(Error::PreconditionViolated("f(0) and f(1) are not both zero".into()));
    }
    chain_by(f, &KValue::monomial(1, 0), len)
}

/// Common divisor of a finite subset of `R` with an ACCP quotient.
#[derive(Clone, Debug, Serialize)]
pub struct BcDivisorReport {
    pub early_exit: bool,
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub d: KPoly,
    pub quotients: Vec<KPoly>,
    pub s_index: usize,
    pub factors_satisfy_accp: bool,
}

fn check_quotient(w: &KPoly, d: &KPoly, q: &KPoly) -> Result<()> {
    if !in_r(q) || d.mul(q) != *w {
        return Err(Error::PreconditionViolated(format!("quotient {q} of {w} by {d} is not in R")));
    }
    Ok(())
}

/// Builds `d = (x/y²)^N X^m (y/x²)^N (X − 1)^m` dividing every `w` in `R`.
pub fn weak_accp_divisor_bc(ws: &[KPoly]) -> Result<BcDivisorReport> {
    if ws.is_empty() {
        return Err(Error::EmptyCandidateSet);
    }
    let mut accp = Vec::with_capacity(ws.len());
    for w in ws {
        if w.is_zero() {
            return Err(Error::ZeroElement);
        }
        accp.push(accp_element_bc(w)?);
    }
    if let Some(s_index) = accp.iter().position(|&a| a) {
        return Ok(BcDivisorReport {
            early_exit: true,
            m: 0,
            n: 0,
            d: KPoly::one(),
            quotients: ws.to_vec(),
            s_index,
            factors_satisfy_accp: true,
        });
    }
    let split: Vec<(u32, KPoly)> = ws.iter().map(|w| w.x_x_minus_1_multiplicity().expect("nonzero")).collect();
    let m = split.iter().map(|(mw, _)| *mw).min().expect("nonempty");
    let base = KPoly::x_x_minus_1().pow(m);
    let mut n = 0i64;
    let mut gs = Vec::with_capacity(ws.len());
    for w in ws {
        let g = w.exact_div(&base)?.expect("m is a common multiplicity");
        let vals = g.coeffs().iter().filter_map(KValue::valuations);
        let (jmin, kmin) = vals.fold((i64::MAX, i64::MAX), |(a, b), (j, k)| (a.min(j), b.min(k)));
        // c_w = x^jmin y^kmin, so x^N y^N c_w ∈ D needs N ≥ -jmin and N ≥ -kmin
        n = n.max(-jmin).max(-kmin);
        gs.push(g);
    }
    let xy_n = KValue::monomial(n, n);
    let d = base.scale(&xy_n.inv()?);
    let quotients: Vec<KPoly> = gs.iter().map(|g| g.scale(&xy_n)).collect();
    for (w, q) in ws.iter().zip(&quotients) {
        check_quotient(w, &d, q)?;
    }
    let mut s_index = None;
    for (i, q) in quotients.iter().enumerate() {
        if accp_element_bc(q)? {
            s_index = Some(i);
            break;
        }
    }
    let s_index = s_index.ok_or_else(|| Error::PreconditionViolated("no quotient satisfies ACCP".into()))?;
    let f1 = KPoly::var().pow(m).scale(&KValue::monomial(n, -2 * n));
    let f2 = KPoly::x_minus_1().pow(m).scale(&KValue::monomial(-2 * n, n));
    let factors_satisfy_accp = matches!(accp_element_bc(&f1), Ok(true)) && matches!(accp_element_bc(&f2), Ok(true));
    Ok(BcDivisorReport { early_exit: false, m, n: n as u32, d, quotients, s_index, factors_satisfy_accp })
}
