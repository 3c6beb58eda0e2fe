//! Canonical decompositions and the functions built on them: the Grams decomposition
//! `b = q(b) + Σ c_n/(base^n p_n)`, the sparse-prime decomposition `q = n_0 + Σ n_i/p_i`,
//! its shifted variant on `B + ⟨A⟩`, greatest divisors, `φ`, `ψ` and `μ`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::algebra::PolyExpr;
use crate::error::{Error, Result};
use crate::exact::rational::{denom_unsigned, split_prime_power};
use crate::exact::{PrimeSeq, Rational};
use crate::monoid::presentation::GdFamily;
use crate::monoid::rank_two::{a_span_contains, a_span_witness, beta_offset, sparse_prime, AVector};
use crate::monoid::{MonoidValue, Presentation};

/// `b = q_part + Σ c_n/(base^n p_n)` with `q_part` a `base`-adic fraction and `0 ≤ c_n < p_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramsDecomposition {
    pub q_part: Rational,
    pub coeffs: BTreeMap<usize, u64>,
}

impl GramsDecomposition {
    pub fn reconstruct(&self, fam: &GdFamily) -> Rational {
        let mut total = self.q_part.clone();
        for (&n, &c) in &self.coeffs {
            total += &fam.generator(n).scale(c as i64);
        }
        total
    }
}

/// `q = n0 + Σ n_i/p_i` over the sparse primes with `0 ≤ n_i < p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PDecomposition {
    pub n0: u64,
    pub coeffs: BTreeMap<usize, u64>,
}

impl PDecomposition {
    pub fn reconstruct(&self) -> Rational {
        let mut total = Rational::integer(self.n0 as i64);
        for (&i, &c) in &self.coeffs {
            total += &Rational::new(c as i64, sparse_prime(i) as i64);
        }
        total
    }

    /// Coefficient vector over indices `1..=len`.
    pub fn vector(&self, len: usize) -> Vec<u64> {
        (1..=len).map(|i| self.coeffs.get(&i).copied().unwrap_or(0)).collect()
    }

    pub fn max_index(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }
}

/// `r = β + n + Σ n_i/p_i` with `−1 ≤ n_i ≤ p_i − 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedDecomposition {
    pub n: u64,
    pub coeffs: BTreeMap<usize, i64>,
}

impl ShiftedDecomposition {
    pub fn reconstruct(&self) -> MonoidValue {
        let mut q = Rational::integer(self.n as i64);
        for (&i, &c) in &self.coeffs {
            q += &Rational::new(c, sparse_prime(i) as i64);
        }
        MonoidValue::RankTwo { beta: 1, q }
    }
}

fn not_decomposable(x: impl std::fmt::Display) -> Error {
    Error::NotDecomposable(x.to_string())
}

/// Splits a positive integer into distinct primes of `seq`, with their indices.
pub(crate) fn squarefree_support(mut m: BigUint, seq: &PrimeSeq) -> Option<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    let mut n = 1usize;
    while !m.is_one() {
        if seq.len_hint().is_some_and(|len| n > len) {
            return None;
        }
        if matches!(seq, PrimeSeq::Sparse { .. }) && n > 31 {
            return None;
        }
        let p = seq.nth(n);
        if BigUint::from(p) > m {
            return None;
        }
        let (k, rest) = split_prime_power(&m, p);
        match k {
            0 => {}
            1 => {
                out.push((n, p));
                m = rest;
            }
            _ => return None,
        }
        n += 1;
    }
    Some(out)
}

/// The unique Grams decomposition of `b` in `⟨1/(base^n p_n)⟩`; failure certifies `b ∉ M`.
pub fn grams_decompose_family(fam: &GdFamily, b: &Rational) -> Result<GramsDecomposition> {
    if b.is_negative() {
        return Err(not_decomposable(b));
    }
    let (_, m) = split_prime_power(&denom_unsigned(b), fam.base);
    let support = squarefree_support(m, &fam.primes).ok_or_else(|| not_decomposable(b))?;
    let mut coeffs = BTreeMap::new();
    let mut rest = b.clone();
    for (n, p) in support {
        let scale = BigInt::from(fam.base).pow(n as u32) * BigInt::from(p);
        let lifted = b * &Rational::from_bigs(scale, BigInt::one());
        let c = lifted.residue_mod(p).ok_or_else(|| not_decomposable(b))?;
        if c > 0 {
            rest -= &fam.generator(n).scale(c as i64);
            coeffs.insert(n, c);
        }
    }
    let (_, leftover) = split_prime_power(&denom_unsigned(&rest), fam.base);
    if rest.is_negative() || !leftover.is_one() {
        return Err(not_decomposable(b));
    }
    Ok(GramsDecomposition { q_part: rest, coeffs })
}

fn gd_family_of(pres: &Presentation) -> Result<GdFamily> {
    pres.gd_family().ok_or_else(|| {
        Error::PreconditionViolated(format!("{} has no Grams-type decomposition", pres.family_name()))
    })
}

pub fn grams_decompose(pres: &Presentation, b: &Rational) -> Result<GramsDecomposition> {
    grams_decompose_family(&gd_family_of(pres)?, b)
}

/// Greatest divisor of `b` in the valuation submonoid `⟨1/base^n⟩`.
pub fn gd(pres: &Presentation, b: &Rational) -> Result<Rational> {
    Ok(grams_decompose(pres, b)?.q_part)
}

/// Exact membership in the full (untruncated) Grams-type monoid.
pub fn grams_member(pres: &Presentation, b: &Rational) -> Result<bool> {
    match grams_decompose(pres, b) {
        Ok(_) => Ok(true),
        Err(Error::NotDecomposable(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Residues `n_i ∈ [0, p_i)` of `q` at the sparse primes dividing its denominator.
fn sparse_residues(q: &Rational) -> Option<Vec<(usize, u64, u64)>> {
    let support = squarefree_support(denom_unsigned(q), &PrimeSeq::sparse())?;
    support
        .into_iter()
        .map(|(i, p)| {
            let lifted = q * &Rational::integer(p as i64);
            lifted.residue_mod(p).map(|c| (i, p, c))
        })
        .collect()
}

/// The unique decomposition `q = n0 + Σ n_i/p_i`; failure certifies `q ∉ P`.
pub fn p_decompose(q: &Rational) -> Result<PDecomposition> {
    if q.is_negative() {
        return Err(not_decomposable(q));
    }
    let residues = sparse_residues(q).ok_or_else(|| not_decomposable(q))?;
    let mut rest = q.clone();
    let mut coeffs = BTreeMap::new();
    for (i, p, c) in residues {
        if c > 0 {
            rest -= &Rational::new(c as i64, p as i64);
            coeffs.insert(i, c);
        }
    }
    if rest.is_negative() || !rest.is_integer() {
        return Err(not_decomposable(q));
    }
    let n0 = rest.floor().to_u64().ok_or_else(|| not_decomposable(q))?;
    Ok(PDecomposition { n0, coeffs })
}

/// Divisibility in `P = ⟨1/p_n⟩`, exact through [`p_decompose`].
pub fn divides_p(a: &Rational, b: &Rational) -> bool {
    p_decompose(&(b - a)).is_ok()
}

/// The unique `r = β + n + Σ n_i/p_i` with `n_i ∈ [−1, p_i − 2]`.
pub fn shifted_decompose(r: &MonoidValue) -> Result<ShiftedDecomposition> {
    let q = match r {
        MonoidValue::RankTwo { beta: 1, q } => q,
        MonoidValue::RankTwo { .. } => {
            return Err(Error::PreconditionViolated("the β-coefficient must be 1".into()))
        }
        _ => return Err(Error::TagMismatch),
    };
    let residues = sparse_residues(q).ok_or_else(|| not_decomposable(r))?;
    let mut rest = q.clone();
    let mut coeffs = BTreeMap::new();
    for (i, p, c) in residues {
        let n_i = if c == p - 1 { -1 } else { c as i64 };
        if n_i != 0 {
            rest -= &Rational::new(n_i, p as i64);
            coeffs.insert(i, n_i);
        }
    }
    if rest.is_negative() || !rest.is_integer() {
        return Err(not_decomposable(r));
    }
    let n = rest.floor().to_u64().ok_or_else(|| not_decomposable(r))?;
    Ok(ShiftedDecomposition { n, coeffs })
}

/// The β-coefficient of a rank-two value (0 for every other tag).
pub fn phi(r: &MonoidValue) -> u64 {
    match r {
        MonoidValue::RankTwo { beta, .. } => *beta,
        _ => 0,
    }
}

/// `ψ(r) = n + Σ max(n_i, 0)/p_i` from the shifted decomposition.
pub fn psi(r: &MonoidValue) -> Result<Rational> {
    let d = shifted_decompose(r)?;
    let mut total = Rational::integer(d.n as i64);
    for (&i, &c) in &d.coeffs {
        if c > 0 {
            total += &Rational::new(c, sparse_prime(i) as i64);
        }
    }
    Ok(total)
}

/// Outcome of the sufficient test "two distinct coefficients are at least 2".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficientCheck {
    pub holds: bool,
    pub witness: Option<Vec<AVector>>,
}

pub fn in_a_span_sufficient(coeffs: &BTreeMap<usize, u64>) -> SufficientCheck {
    let holds = coeffs.values().filter(|&&c| c >= 2).count() >= 2;
    if !holds {
        return SufficientCheck { holds, witness: None };
    }
    let len = coeffs.keys().next_back().copied().unwrap_or(0);
    let v: Vec<u64> = (1..=len).map(|i| coeffs.get(&i).copied().unwrap_or(0)).collect();
    SufficientCheck { holds, witness: a_span_witness(&v) }
}

/// Candidate coefficient vectors of `n0 + Σ n_i/p_i` over indices `≤ len`, obtained by
/// spending the integer part as `p_i/p_i` at one or two positions.
fn carry_vectors(d: &PDecomposition, len: usize) -> Vec<Vec<u64>> {
    let base = d.vector(len);
    if d.n0 == 0 {
        return vec![base];
    }
    let mut out = Vec::new();
    for i in 0..len {
        let mut v = base.clone();
        v[i] += d.n0 * sparse_prime(i + 1);
        out.push(v);
        if d.n0 >= 2 {
            for j in 0..len {
                if j != i {
                    let mut w = base.clone();
                    w[i] += sparse_prime(i + 1);
                    w[j] += (d.n0 - 1) * sparse_prime(j + 1);
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Membership in `⟨A⟩` using only indices `≤ depth`.
pub fn in_a_span_truncated(q: &Rational, depth: usize) -> bool {
    let Ok(d) = p_decompose(q) else { return false };
    if d.max_index() > depth {
        return false;
    }
    if d.n0 >= 2 && depth >= 2 {
        return true;
    }
    carry_vectors(&d, depth).iter().any(|v| a_span_contains(v))
}

/// Membership in the full `⟨A⟩`.
pub fn in_a_span_full(q: &Rational) -> bool {
    let Ok(d) = p_decompose(q) else { return false };
    in_a_span_truncated(q, d.max_index() + 2)
}

/// Smallest `N ≤ ℓ + 2` for which `r − φ(r)β_N` passes the sufficient `⟨A⟩` test.
pub fn beta_divisor_threshold(r: &MonoidValue) -> Result<usize> {
    let (phi_r, q) = match r {
        MonoidValue::RankTwo { beta, q } => (*beta, q),
        _ => return Err(Error::TagMismatch),
    };
    if phi_r < 2 {
        return Err(Error::PreconditionViolated(format!("φ({r}) = {phi_r} < 2")));
    }
    let ell = squarefree_support(denom_unsigned(q), &PrimeSeq::sparse())
        .and_then(|s| s.last().map(|&(i, _)| i))
        .unwrap_or(0);
    for n in 1..=ell + 2 {
        let residual = q + &beta_offset(n).scale(phi_r as i64);
        let Ok(d) = p_decompose(&residual) else { continue };
        let len = d.max_index().max(n);
        for v in carry_vectors(&d, len) {
            let coeffs: BTreeMap<usize, u64> =
                v.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i + 1, c)).collect();
            if in_a_span_sufficient(&coeffs).holds {
                return Ok(n);
            }
        }
    }
    Err(not_decomposable(r))
}

/// `μ(f) = min{gd(α) : α ∈ supp f}` with gd taken in the presented Grams-type monoid.
pub fn mu(pres: &Presentation, f: &PolyExpr) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut best: Option<Rational> = None;
    for e in f.support() {
        let alpha = e.as_rational().ok_or(Error::TagMismatch)?;
        let g = gd(pres, alpha)?;
        best = Some(match best {
            Some(b) if b <= g => b,
            _ => g,
        });
    }
    Ok(best.expect("nonzero polynomial has support"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn grams_examples() {
        let g = Presentation::grams(4);
        let d = grams_decompose(&g, &r(1, 6)).unwrap();
        assert_eq!(d.q_part, Rational::zero());
        assert_eq!(d.coeffs, BTreeMap::from([(1, 1)]));
        let d = grams_decompose(&g, &r(1, 2)).unwrap();
        assert_eq!(d.q_part, r(1, 2));
        assert!(d.coeffs.is_empty());
        assert_eq!(grams_decompose(&g, &Rational::zero()).unwrap().q_part, Rational::zero());
        assert_eq!(gd(&g, &r(2, 3)).unwrap(), r(1, 2));
        assert_eq!(gd(&g, &r(1, 6)).unwrap(), Rational::zero());
        assert!(grams_decompose(&g, &r(1, 9)).is_err());
        assert!(grams_decompose(&g, &r(1, 12)).is_err());
    }

    #[test]
    fn p_examples() {
        let d = p_decompose(&r(1, 5)).unwrap();
        assert_eq!((d.n0, d.coeffs.clone()), (0, BTreeMap::from([(1, 1)])));
        let d = p_decompose(&r(6, 5)).unwrap();
        assert_eq!((d.n0, d.coeffs.clone()), (1, BTreeMap::from([(1, 1)])));
        assert_eq!(p_decompose(&Rational::zero()).unwrap().n0, 0);
        assert!(p_decompose(&r(1, 7)).is_err());
        assert!(p_decompose(&r(1, 25)).is_err());
    }

    #[test]
    fn shifted_examples() {
        use crate::monoid::rank_two::beta;
        let d = shifted_decompose(&beta(0)).unwrap();
        assert_eq!((d.n, d.coeffs.len()), (0, 0));
        for l in 1..=4 {
            let d = shifted_decompose(&beta(l)).unwrap();
            assert_eq!(d.n, 0);
            assert_eq!(d.coeffs, (1..=l).map(|i| (i, -1)).collect());
            assert_eq!(psi(&beta(l)).unwrap(), Rational::zero());
        }
        let x = MonoidValue::RankTwo { beta: 1, q: r(1, 5) };
        assert_eq!(shifted_decompose(&x).unwrap().coeffs, BTreeMap::from([(1, 1)]));
        let y = MonoidValue::RankTwo { beta: 1, q: r(2, 5) + r(1, 17) };
        assert_eq!(psi(&y).unwrap(), r(2, 5) + r(1, 17));
    }

    #[test]
    fn phi_examples() {
        use crate::monoid::rank_two::beta;
        assert_eq!(phi(&beta(3).scale(2)), 2);
        assert_eq!(phi(&MonoidValue::RankTwo { beta: 0, q: r(2, 5) }), 0);
        assert_eq!(phi(&MonoidValue::RankTwo { beta: 1, q: r(7, 5) }), 1);
    }

    #[test]
    fn sufficient_condition_examples() {
        let c = in_a_span_sufficient(&BTreeMap::from([(1, 2), (2, 2)]));
        assert!(c.holds);
        assert!(c.witness.is_some());
        assert!(!in_a_span_sufficient(&BTreeMap::from([(1, 1)])).holds);
        assert!(!in_a_span_sufficient(&BTreeMap::new()).holds);
        assert!(!in_a_span_full(&r(1, 5)));
        assert!(in_a_span_full(&Rational::zero()));
    }

    #[test]
    fn threshold_examples() {
        use crate::monoid::rank_two::beta;
        let two_beta = MonoidValue::RankTwo { beta: 2, q: Rational::zero() };
        assert_eq!(beta_divisor_threshold(&two_beta).unwrap(), 2);
        let plus = MonoidValue::RankTwo { beta: 2, q: r(1, 5) };
        assert_eq!(beta_divisor_threshold(&plus).unwrap(), 2);
        assert!(beta_divisor_threshold(&beta(1).scale(3)).unwrap() <= 3);
        assert!(beta_divisor_threshold(&beta(1)).is_err());
    }
}
