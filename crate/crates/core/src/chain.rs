//! ACCP machinery: chain certificates, element-level verdicts, weak-ACCP witnesses,
//! the strongly-atomic common-divisor procedure and the family taxonomy.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::decompose::{beta_divisor_threshold, gd, grams_decompose, phi, squarefree_support};
use crate::error::{Error, Result};
use crate::exact::rational::denom_unsigned;
use crate::exact::{PrimeSeq, Rational};
use crate::monoid::rank_two::{beta, beta_offset};
use crate::monoid::{Factorization, Family, Kernel, MonoidValue, Presentation, DEFAULT_BUDGET};

/// Closed-form continuation of a chain past its last listed term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum ChainRule {
    /// Terms `fixed + moving/base^k`.
    GramsHalving { fixed: Rational, moving: Rational, base: u64, k: u32 },
    /// Terms `fixed + 1/p_n`, stepping `n ↦ n + 2` over all primes.
    PairprimesShift { fixed: Rational, index: usize },
    /// Terms `fixed + d(q) q^m`, using `d(q)q^m = (d(q) − n(q))q^m + d(q)q^{m+1}`.
    SqRelation { fixed: Rational, q: Rational, m: u32 },
    /// Terms `φ β_n`, stepping `n ↦ n + step`.
    Rank2Beta { phi: u64, index: usize, step: usize },
    None,
}

impl ChainRule {
    /// The term the rule currently describes.
    pub fn current(&self) -> Option<MonoidValue> {
        match self {
            ChainRule::GramsHalving { fixed, moving, base, k } => {
                let scale = Rational::from_bigs(BigInt::one(), BigInt::from(*base).pow(*k));
                Some(MonoidValue::Puiseux(fixed + &(moving * &scale)))
            }
            ChainRule::PairprimesShift { fixed, index } => {
                Some(MonoidValue::Puiseux(fixed + &Rational::recip_of(PrimeSeq::AllPrimes.nth(*index))))
            }
            ChainRule::SqRelation { fixed, q, m } => {
                let d = Rational::from_bigs(q.denom().clone(), BigInt::one());
                Some(MonoidValue::Puiseux(fixed + &(d * q.pow(*m as i32))))
            }
            ChainRule::Rank2Beta { phi, index, .. } => Some(beta(*index).scale(*phi)),
            ChainRule::None => None,
        }
    }

    pub fn advance(&self) -> ChainRule {
        match self.clone() {
            ChainRule::GramsHalving { fixed, moving, base, k } => ChainRule::GramsHalving { fixed, moving, base, k: k + 1 },
            ChainRule::PairprimesShift { fixed, index } => ChainRule::PairprimesShift { fixed, index: index + 2 },
            ChainRule::SqRelation { fixed, q, m } => ChainRule::SqRelation { fixed, q, m: m + 1 },
            ChainRule::Rank2Beta { phi, index, step } => ChainRule::Rank2Beta { phi, index: index + step, step },
            ChainRule::None => ChainRule::None,
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, ChainRule::None)
    }
}

/// A strictly ascending chain of principal ideals `b₀ + M ⊊ b₁ + M ⊊ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub start: MonoidValue,
    pub terms: Vec<MonoidValue>,
    pub quotients: Vec<MonoidValue>,
    pub rule: ChainRule,
}

impl ChainCertificate {
    /// Lists `extra` further terms produced by `rule`, starting from `start`.
    pub fn from_rule(start: MonoidValue, rule: ChainRule, extra: usize) -> Result<Self> {
        let mut terms = vec![start.clone()];
        let mut r = rule;
        let first = r.current().ok_or_else(|| Error::PreconditionViolated("rule has no terms".into()))?;
        if first != start {
            terms.push(first);
        }
        while terms.len() < extra + 1 {
            r = r.advance();
            terms.push(r.current().expect("rule has terms"));
        }
        ChainCertificate::from_terms(terms, r)
    }

    pub fn from_terms(terms: Vec<MonoidValue>, rule: ChainRule) -> Result<Self> {
        let start = terms.first().cloned().ok_or_else(|| Error::PreconditionViolated("empty chain".into()))?;
        let quotients = terms
            .windows(2)
            .map(|w| {
                w[0].try_sub(&w[1])?.ok_or_else(|| Error::PreconditionViolated(format!("{} < {}", w[0], w[1])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainCertificate { start, terms, quotients, rule })
    }
}

fn member_exact_or_truncated(kernel: &Kernel, v: &MonoidValue) -> Result<bool> {
    if !v.is_admissible() {
        return Ok(false);
    }
    kernel.member_best(v)
}

fn step_is_strict(kernel: &Kernel, hi: &MonoidValue, lo: &MonoidValue) -> Result<bool> {
    match hi.try_sub(lo)? {
        Some(q) if !q.is_zero() => member_exact_or_truncated(kernel, &q),
        _ => Ok(false),
    }
}

/// True iff every listed quotient is a nonzero member and the rule yields three
/// further strict steps.
pub fn validate_chain(pres: &Presentation, cert: &ChainCertificate) -> bool {
    validate_chain_inner(pres, cert).unwrap_or(false)
}

fn validate_chain_inner(pres: &Presentation, cert: &ChainCertificate) -> Result<bool> {
    let kernel = Kernel::new(&pres.with_depth(pres.depth.max(cert_depth(cert))))?;
    if cert.terms.first() != Some(&cert.start) || cert.quotients.len() + 1 != cert.terms.len() {
        return Ok(false);
    }
    for t in &cert.terms {
        if !member_exact_or_truncated(&kernel, t)? {
            return Ok(false);
        }
    }
    for (w, q) in cert.terms.windows(2).zip(&cert.quotients) {
        if w[0].try_sub(&w[1])?.as_ref() != Some(q) || !step_is_strict(&kernel, &w[0], &w[1])? {
            return Ok(false);
        }
    }
    if cert.rule.is_none() {
        return Ok(true);
    }
    if cert.rule.current().as_ref() != cert.terms.last() {
        return Ok(false);
    }
    let mut rule = cert.rule.clone();
    for _ in 0..3 {
        let cur = rule.current().expect("rule has terms");
        rule = rule.advance();
        let next = rule.current().expect("rule has terms");
        if !member_exact_or_truncated(&kernel, &next)? || !step_is_strict(&kernel, &cur, &next)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SatisfiesReason {
    /// Finitely generated, or an atom, or zero: every chain from `b` is finite.
    BoundedLengthSet,
    /// `gd(b) = 0` in a Grams-type family.
    GdZero,
    /// Every divisor was enumerated and each satisfies ACCP.
    ExhaustedCertified,
    /// `φ(b) ≤ 1` in the rank-two monoid: chains map injectively to chains of `P` via `ψ`.
    PhiAtMostOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum AccpVerdict {
    Satisfies { reason: SatisfiesReason },
    Fails { cert: ChainCertificate },
    Unknown { note: String },
}

impl AccpVerdict {
    pub fn satisfies(&self) -> bool {
        matches!(self, AccpVerdict::Satisfies { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self, AccpVerdict::Fails { .. })
    }

    pub fn certificate(&self) -> Option<&ChainCertificate> {
        match self {
            AccpVerdict::Fails { cert } => Some(cert),
            _ => None,
        }
    }
}

impl fmt::Display for AccpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AccpVerdict::Satisfies { reason } => write!(f, "satisfies ({reason:?})"),
            AccpVerdict::Fails { cert } => write!(f, "fails (chain of {} terms)", cert.terms.len()),
            AccpVerdict::Unknown { note } => write!(f, "unknown ({note})"),
        }
    }
}

fn kernel_with(pres: &Presentation, budget: u64) -> Result<Kernel> {
    Ok(Kernel::new(pres)?.with_budget(budget))
}

/// Largest all-primes index dividing the denominator of `q`, if it is squarefree.
fn pair_primes_index(q: &Rational) -> Option<usize> {
    squarefree_support(denom_unsigned(q), &PrimeSeq::AllPrimes).map(|s| s.last().map(|&(i, _)| i).unwrap_or(0))
}

/// Smallest `k` with `den(b) | d^k`, if any.
fn power_exponent(d: &BigUint, den: &BigUint) -> Option<u32> {
    let mut power = BigUint::one();
    let mut k = 0;
    while !(&power % den == BigUint::from(0u32)) {
        let next = &power * d;
        if next.gcd(den) == power.gcd(den) {
            return None;
        }
        power = next;
        k += 1;
    }
    Some(k)
}

/// A truncation depth at which `b` and its natural divisors are visible.
pub fn effective_depth(pres: &Presentation, b: &MonoidValue) -> usize {
    let base = pres.depth;
    match (&pres.family, b) {
        (Family::Explicit { gens }, _) => gens.len(),
        (Family::Grams { .. } | Family::Gp { .. } | Family::IntersectG { .. }, MonoidValue::Puiseux(q)) => {
            grams_decompose(pres, q)
                .ok()
                .and_then(|d| d.coeffs.keys().next_back().copied())
                .unwrap_or(0)
                .max(base)
        }
        (Family::PairPrimes, MonoidValue::Puiseux(q)) => pair_primes_index(q).unwrap_or(0).max(base).max(2),
        (Family::CyclicSq { q: base_q }, MonoidValue::Puiseux(q)) => {
            power_exponent(&denom_unsigned(base_q), &denom_unsigned(q)).unwrap_or(0) as usize
        }
        .max(base),
        _ => base,
    }
}

fn require_member(kernel: &Kernel, b: &MonoidValue) -> Result<()> {
    if member_exact_or_truncated(kernel, b)? {
        Ok(())
    } else {
        Err(Error::NotAMember(b.to_string()))
    }
}

const CHAIN_TERMS: usize = 4;

/// ACCP verdict for the principal ideal `b + M`.
pub fn accp_element(pres: &Presentation, b: &MonoidValue, budget: u64) -> Result<AccpVerdict> {
    let kernel = kernel_with(pres, budget)?;
    pres.check_tag(b)?;
    require_member(&kernel, b)?;
    if b.is_zero() {
        return Ok(AccpVerdict::Satisfies { reason: SatisfiesReason::BoundedLengthSet });
    }
    let verdict = match (&pres.family, b) {
        (Family::Explicit { .. }, _) => AccpVerdict::Satisfies { reason: SatisfiesReason::BoundedLengthSet },
        (Family::Grams { .. } | Family::Gp { .. } | Family::IntersectG { .. }, MonoidValue::Puiseux(q)) => {
            let g = gd(pres, q)?;
            if g.is_zero() {
                AccpVerdict::Satisfies { reason: SatisfiesReason::GdZero }
            } else {
                let base = pres.gd_family().expect("gd family").base;
                let rule = ChainRule::GramsHalving { fixed: q - &g, moving: g, base, k: 0 };
                AccpVerdict::Fails { cert: ChainCertificate::from_rule(b.clone(), rule, CHAIN_TERMS)? }
            }
        }
        (Family::PairPrimes, MonoidValue::Puiseux(q)) => {
            let k = pair_primes_index(q).ok_or_else(|| Error::NotAMember(b.to_string()))?;
            let mut found = None;
            for n in 1..=k + 2 {
                let p = Rational::recip_of(PrimeSeq::AllPrimes.nth(n));
                let rest = q - &p;
                if !rest.is_negative() && member_exact_or_truncated(&kernel, &MonoidValue::Puiseux(rest.clone()))? {
                    found = Some((rest, n));
                    break;
                }
            }
            match found {
                Some((fixed, index)) => {
                    let rule = ChainRule::PairprimesShift { fixed, index };
                    AccpVerdict::Fails { cert: ChainCertificate::from_rule(b.clone(), rule, CHAIN_TERMS)? }
                }
                None if kernel.presentation().with_depth(k.max(1)).generators().contains(b) => {
                    AccpVerdict::Satisfies { reason: SatisfiesReason::BoundedLengthSet }
                }
                None => AccpVerdict::Unknown { note: format!("no 1/p_n divides {b} for n ≤ {}", k + 2) },
            }
        }
        (Family::CyclicSq { q: base }, MonoidValue::Puiseux(q)) => {
            let dq = denom_unsigned(base);
            let d = Rational::from_bigs(BigInt::from(dq.clone()), BigInt::one());
            let k = power_exponent(&dq, &denom_unsigned(q)).ok_or_else(|| Error::NotAMember(b.to_string()))?;
            let mut found = None;
            for m in 0..=k + 1 {
                let rest = q - &(&d * &base.pow(m as i32));
                if !rest.is_negative() && member_exact_or_truncated(&kernel, &MonoidValue::Puiseux(rest.clone()))? {
                    found = Some((rest, m));
                    break;
                }
            }
            match found {
                Some((fixed, m)) => {
                    let rule = ChainRule::SqRelation { fixed, q: base.clone(), m };
                    AccpVerdict::Fails { cert: ChainCertificate::from_rule(b.clone(), rule, CHAIN_TERMS)? }
                }
                None if (0..=k as i32).any(|i| &base.pow(i) == q) => {
                    AccpVerdict::Satisfies { reason: SatisfiesReason::BoundedLengthSet }
                }
                None => AccpVerdict::Unknown { note: format!("no d(q)q^m divides {b} for m ≤ {}", k + 1) },
            }
        }
        (Family::RankTwoP, MonoidValue::RankTwo { .. }) => {
            let f = phi(b);
            if f <= 1 {
                AccpVerdict::Satisfies { reason: SatisfiesReason::PhiAtMostOne }
            } else {
                let n = beta_divisor_threshold(b)?;
                let step = if f % 2 == 0 { 1 } else { 2 };
                let index = if beta(n).scale(f) == *b { n + step } else { n };
                let rule = ChainRule::Rank2Beta { phi: f, index, step };
                AccpVerdict::Fails { cert: ChainCertificate::from_rule(b.clone(), rule, CHAIN_TERMS)? }
            }
        }
        (Family::Zaks, _) => {
            if kernel.atoms()?.contains(b) {
                AccpVerdict::Satisfies { reason: SatisfiesReason::BoundedLengthSet }
            } else {
                AccpVerdict::Unknown { note: "no exact ACCP decider for the Zaks monoid".into() }
            }
        }
        _ => return Err(Error::TagMismatch),
    };
    if let AccpVerdict::Fails { cert } = &verdict {
        debug_assert!(validate_chain(&pres.with_depth(effective_depth(pres, b)), cert), "emitted certificate must validate");
    }
    Ok(verdict)
}

/// Depth needed to see every term the rule's spot check produces.
fn cert_depth(cert: &ChainCertificate) -> usize {
    match &cert.rule {
        ChainRule::Rank2Beta { index, step, .. } => index + 3 * step,
        _ => 0,
    }
}

/// Atoms of an element certified to satisfy ACCP, by repeated atom extraction.
pub fn factor_accp_element(pres: &Presentation, b: &MonoidValue) -> Result<Factorization> {
    let verdict = accp_element(pres, b, DEFAULT_BUDGET)?;
    if !verdict.satisfies() {
        return Err(Error::PreconditionViolated(format!("{b} is not certified to satisfy ACCP: {verdict}")));
    }
    let kernel = Kernel::new(&pres.with_depth(effective_depth(pres, b)))?;
    let atoms = kernel.atoms()?;
    let mut out = Factorization::empty();
    let mut cur = b.clone();
    'outer: while !cur.is_zero() {
        for a in atoms.iter().rev() {
            if let Some(rest) = cur.try_sub(a)? {
                if rest.is_admissible() && (rest.is_zero() || member_exact_or_truncated(&kernel, &rest)?) {
                    *out.atoms.entry(a.clone()).or_insert(0) += 1;
                    cur = rest;
                    continue 'outer;
                }
            }
        }
        return Err(Error::NotDecomposable(cur.to_string()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "evidence", rename_all = "kebab-case")]
pub enum NotFoundEvidence {
    /// Every common divisor at the stated depth was tried and every residual fails ACCP.
    ExhaustiveRefutation { depth: usize, divisors: Vec<MonoidValue> },
    Unknown { note: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum WeakAccpWitness {
    Found { d: MonoidValue, s: MonoidValue, verdict: AccpVerdict },
    NotFound { evidence: NotFoundEvidence },
}

/// A common divisor `d` of `S` and some `s ∈ S` with `s − d` satisfying ACCP.
pub fn weak_accp_witness(pres: &Presentation, s_set: &[MonoidValue], budget: u64) -> Result<WeakAccpWitness> {
    if s_set.is_empty() {
        return Err(Error::PreconditionViolated("empty set".into()));
    }
    let kernel = kernel_with(pres, budget)?;
    for s in s_set {
        pres.check_tag(s)?;
        require_member(&kernel, s)?;
    }
    let found = match (&pres.family, pres.gd_family()) {
        (_, Some(_)) => min_gd_witness(pres, s_set, budget)?,
        (Family::RankTwoP, _) => rank_two_witness(pres, s_set, budget)?,
        _ => None,
    };
    if let Some(w) = found {
        return Ok(w);
    }
    let divisors = kernel.common_divisors(s_set)?;
    let mut unknown = None;
    for d in &divisors {
        for s in s_set {
            let residual = s.try_sub(d)?.expect("common divisor");
            match accp_element(pres, &residual, budget)? {
                v @ AccpVerdict::Satisfies { .. } => {
                    return Ok(WeakAccpWitness::Found { d: d.clone(), s: s.clone(), verdict: v })
                }
                AccpVerdict::Unknown { note } => {
                    unknown.get_or_insert(format!("residual {residual}: {note}"));
                }
                AccpVerdict::Fails { .. } => {}
            }
        }
    }
    let evidence = match unknown {
        Some(note) => NotFoundEvidence::Unknown { note },
        None => NotFoundEvidence::ExhaustiveRefutation { depth: pres.depth, divisors },
    };
    Ok(WeakAccpWitness::NotFound { evidence })
}

fn min_gd_witness(pres: &Presentation, s_set: &[MonoidValue], budget: u64) -> Result<Option<WeakAccpWitness>> {
    let mut best: Option<(Rational, &MonoidValue)> = None;
    for s in s_set {
        let q = s.as_rational().ok_or(Error::TagMismatch)?;
        let g = gd(pres, q)?;
        if best.as_ref().map_or(true, |(b, _)| &g < b) {
            best = Some((g, s));
        }
    }
    let (d, s) = best.expect("nonempty");
    let d = MonoidValue::Puiseux(d);
    let residual = s.try_sub(&d)?.expect("gd divides");
    let verdict = accp_element(pres, &residual, budget)?;
    Ok(verdict.satisfies().then(|| WeakAccpWitness::Found { d, s: s.clone(), verdict }))
}

/// `d = (m − 1)β_N` with `m` the least β-coefficient in `S`.
fn rank_two_witness(pres: &Presentation, s_set: &[MonoidValue], budget: u64) -> Result<Option<WeakAccpWitness>> {
    let (m, s) = s_set.iter().map(|s| (phi(s), s)).min_by_key(|(m, _)| *m).expect("nonempty");
    if m <= 1 {
        let verdict = AccpVerdict::Satisfies { reason: SatisfiesReason::PhiAtMostOne };
        return Ok(Some(WeakAccpWitness::Found { d: pres.zero(), s: s.clone(), verdict }));
    }
    let limit = s_set
        .iter()
        .map(|x| beta_divisor_threshold(x).unwrap_or(pres.depth))
        .max()
        .unwrap_or(1)
        .max(pres.depth);
    for n in 1..=limit {
        let d = beta(n).scale(m - 1);
        let kernel = kernel_with(&pres.with_depth(pres.depth.max(n)), budget)?;
        let mut common = true;
        for x in s_set {
            if !kernel.divides(&d, x)? {
                common = false;
                break;
            }
        }
        if common {
            let residual = s.try_sub(&d)?.expect("divides");
            let verdict = accp_element(pres, &residual, budget)?;
            if verdict.satisfies() {
                return Ok(Some(WeakAccpWitness::Found { d, s: s.clone(), verdict }));
            }
        }
    }
    Ok(None)
}

/// No atom of the truncated monoid divides both `b` and `c`.
pub fn gcd_is_zero(pres: &Presentation, b: &MonoidValue, c: &MonoidValue) -> Result<bool> {
    let kernel = Kernel::new(pres)?;
    gcd_is_zero_in(&kernel, b, c)
}

fn gcd_is_zero_in(kernel: &Kernel, b: &MonoidValue, c: &MonoidValue) -> Result<bool> {
    for v in [b, c] {
        if !kernel.member(v)? {
            return Err(Error::NotAMember(v.to_string()));
        }
    }
    Ok(common_atom(kernel, b, c)?.is_none())
}

fn common_atom(kernel: &Kernel, b: &MonoidValue, c: &MonoidValue) -> Result<Option<MonoidValue>> {
    let mut atoms = kernel.atoms()?;
    atoms.sort();
    for a in atoms {
        if kernel.divides(&a, b)? && kernel.divides(&a, c)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Largest `t` with `t·g` dividing both `x` and `y`.
fn joint_multiplicity(kernel: &Kernel, g: &Rational, x: &Rational, y: &Rational) -> Result<u64> {
    let cap = (x.min(y) / g).floor().to_u64().unwrap_or(0);
    let divides_both = |t: u64| -> Result<bool> {
        let d = MonoidValue::Puiseux(g.scale(t as i64));
        Ok(kernel.divides(&d, &MonoidValue::Puiseux(x.clone()))? && kernel.divides(&d, &MonoidValue::Puiseux(y.clone()))?)
    };
    let (mut lo, mut hi) = (0u64, cap);
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if divides_both(mid)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// The `t₁/t₂` procedure: a common divisor `d` of `x, y` with `gcd(x − d, y − d) = 0`.
pub fn strong_common_divisor(pres: &Presentation, x: &MonoidValue, y: &MonoidValue, budget: u64) -> Result<MonoidValue> {
    if pres.family != Family::PairPrimes {
        return Err(Error::PreconditionViolated("strong_common_divisor needs the pair-primes family".into()));
    }
    let n = pres.depth.max(10);
    let kernel = kernel_with(&pres.with_depth(n), budget)?;
    for v in [x, y] {
        if !kernel.member(v)? {
            return Err(Error::NotAMember(v.to_string()));
        }
    }
    let gens = kernel.generators().to_vec();
    let qn = gens[n - 1].as_rational().expect("puiseux").clone();
    let qn1 = gens[n - 2].as_rational().expect("puiseux").clone();
    let (xr, yr) = (x.as_rational().expect("puiseux"), y.as_rational().expect("puiseux"));
    let t1 = joint_multiplicity(&kernel, &qn, xr, yr)?;
    let d1 = qn.scale(t1 as i64);
    let t2 = joint_multiplicity(&kernel, &qn1, &(xr - &d1), &(yr - &d1))?;
    let mut d = MonoidValue::Puiseux(&d1 + &qn1.scale(t2 as i64));
    let mut steps = 0u64;
    loop {
        let (rx, ry) = (x.try_sub(&d)?.expect("divisor"), y.try_sub(&d)?.expect("divisor"));
        match common_atom(&kernel, &rx, &ry)? {
            None => break,
            Some(a) => d = d.add(&a)?,
        }
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExhausted(budget));
        }
    }
    debug_assert!(kernel.divides(&d, x)? && kernel.divides(&d, y)?);
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: Tri,
    pub evidence: String,
}

fn flag(value: Tri, evidence: impl Into<String>) -> Flag {
    Flag { value, evidence: evidence.into() }
}

/// Position of a family in `ACCP ⇒ weak-ACCP ⇒ strongly atomic ⇒ atomic`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub family: String,
    pub depth: usize,
    pub budget: u64,
    pub accp: Flag,
    pub weak_accp: Flag,
    pub strongly_atomic: Flag,
    pub atomic: Flag,
}

impl Classification {
    pub fn flags(&self) -> [Tri; 4] {
        [self.accp.value, self.weak_accp.value, self.strongly_atomic.value, self.atomic.value]
    }

    /// No true flag sits above a false one in the implication chain.
    pub fn respects_implications(&self) -> bool {
        let f = self.flags();
        (0..4).all(|i| (i + 1..4).all(|j| !(f[i] == Tri::True && f[j] == Tri::False)))
    }

    fn enforce_implications(&mut self) {
        let flags = [&mut self.accp, &mut self.weak_accp, &mut self.strongly_atomic, &mut self.atomic];
        for i in 0..4 {
            if flags[i].value == Tri::True {
                for j in i + 1..4 {
                    if flags[j].value == Tri::Unknown {
                        flags[j].value = Tri::True;
                        flags[j].evidence = format!("implied by a stronger property; {}", flags[j].evidence);
                    }
                }
            }
        }
        for i in (0..4).rev() {
            if flags[i].value == Tri::False {
                for j in 0..i {
                    if flags[j].value == Tri::Unknown {
                        flags[j].value = Tri::False;
                        flags[j].evidence = format!("a weaker property fails; {}", flags[j].evidence);
                    }
                }
            }
        }
    }
}

fn validated(pres: &Presentation, v: &AccpVerdict, b: &MonoidValue) -> bool {
    match v.certificate() {
        Some(cert) => validate_chain(&pres.with_depth(effective_depth(pres, b)), cert),
        None => false,
    }
}

fn accp_false_flag(pres: &Presentation, b: &MonoidValue, budget: u64, claim: &str) -> Result<Flag> {
    let v = accp_element(pres, b, budget)?;
    Ok(if validated(pres, &v, b) {
        flag(Tri::False, format!("{claim}; chain from {b} validated"))
    } else {
        flag(Tri::Unknown, format!("{claim}; chain from {b} did not validate: {v}"))
    })
}

/// Four-valued taxonomy of the presented family, with re-validated witnesses.
pub fn classify(pres: &Presentation, budget: u64) -> Result<Classification> {
    pres.validate()?;
    let q = MonoidValue::q;
    let mut c = Classification {
        family: pres.family_name().to_string(),
        depth: pres.depth,
        budget,
        accp: flag(Tri::Unknown, ""),
        weak_accp: flag(Tri::Unknown, ""),
        strongly_atomic: flag(Tri::Unknown, ""),
        atomic: flag(Tri::Unknown, ""),
    };
    match &pres.family {
        Family::Explicit { .. } => {
            c.accp = flag(Tri::True, "finitely generated monoids satisfy ACCP");
        }
        Family::Grams { .. } | Family::Gp { .. } | Family::IntersectG { .. } => {
            let fam = pres.gd_family().expect("gd family");
            let dyadic = MonoidValue::Puiseux(Rational::recip_of(fam.base));
            c.accp = accp_false_flag(pres, &dyadic, budget, "gd(b) ≠ 0 gives a non-stabilizing chain")?;
            let g1 = MonoidValue::Puiseux(fam.generator(1));
            let sets = [vec![dyadic.clone()], vec![dyadic.add(&g1)?, dyadic.clone()], vec![g1.clone(), dyadic.add(&g1)?]];
            let mut ok = true;
            for s in &sets {
                ok &= matches!(weak_accp_witness(pres, s, budget)?, WeakAccpWitness::Found { .. });
            }
            c.weak_accp = if ok {
                flag(Tri::True, "the minimum greatest divisor is a common divisor with an ACCP residual; witnesses validated")
            } else {
                flag(Tri::Unknown, "min-gd witness failed on a canonical set")
            };
            c.atomic = flag(Tri::True, "the gd-zero part factors and the dyadic part splits into generators");
        }
        Family::PairPrimes => {
            let (a, b) = (q(1, 2), q(1, 3));
            c.accp = accp_false_flag(pres, &a, budget, "1/p_{n+2} divides 1/p_n")?;
            let refuted = matches!(
                weak_accp_witness(pres, &[a.clone(), b.clone()], budget)?,
                WeakAccpWitness::NotFound { evidence: NotFoundEvidence::ExhaustiveRefutation { .. } }
            ) && gcd_is_zero(pres, &a, &b)?;
            c.weak_accp = if refuted {
                flag(Tri::False, "{1/2, 1/3} has only the common divisor 0 and both elements fail ACCP")
            } else {
                flag(Tri::Unknown, "refutation of {1/2, 1/3} did not complete at this depth")
            };
            let d = strong_common_divisor(pres, &a, &b, budget)?;
            c.strongly_atomic = flag(Tri::True, format!("t-procedure; common divisor {d} of 1/2, 1/3 leaves coprime residuals"));
        }
        Family::CyclicSq { q: base } => {
            let num = Rational::from_bigs(base.numer().clone(), BigInt::one());
            let b = MonoidValue::Puiseux(num);
            c.accp = accp_false_flag(pres, &b, budget, "d(q)q^n = (d(q) − n(q))q^n + d(q)q^{n+1}")?;
            c.weak_accp = flag(Tri::True, "S_q is weak-ACCP but does not satisfy ACCP");
            c.atomic = flag(Tri::True, "generated by the atoms q^n");
        }
        Family::RankTwoP => {
            let two_beta = beta(1).scale(2);
            c.accp = accp_false_flag(pres, &two_beta, budget, "(2β_n + M) does not stabilize")?;
            c.weak_accp = flag(
                Tri::True,
                "the monoid algebra F[M] is weak-ACCP and monomial divisors witness the property in M",
            );
            c.atomic = flag(Tri::True, "the atoms are A ∪ B");
        }
        Family::Zaks => {
            c.atomic = flag(Tri::True, "the Zaks domain F[N] is atomic, and atomicity descends to N");
            c.accp.evidence = "no exact decider".into();
            c.weak_accp.evidence = "open".into();
            c.strongly_atomic.evidence = "open".into();
        }
    }
    c.enforce_implications();
    debug_assert!(c.respects_implications());
    Ok(c)
}

/// `1/(p_n p_{n+2})` as the `n`-th pair-primes generator.
pub fn pair_primes_generator(n: usize) -> Rational {
    Rational::recip_of(PrimeSeq::AllPrimes.nth(n) * PrimeSeq::AllPrimes.nth(n + 2))
}

/// `β_n − β_{n+1} = 1/p_{n+1}`.
pub fn beta_step(n: usize) -> Rational {
    beta_offset(n) - beta_offset(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> MonoidValue {
        MonoidValue::q(n, d)
    }

    #[test]
    fn validate_examples() {
        let gp = Presentation::gp(3, 6);
        let rule = ChainRule::GramsHalving { fixed: Rational::zero(), moving: Rational::one(), base: 3, k: 1 };
        let cert = ChainCertificate::from_rule(q(1, 3), rule, 4).unwrap();
        assert_eq!(cert.terms[1], q(1, 9));
        assert!(validate_chain(&gp, &cert));

        let pp = Presentation::pair_primes(8);
        let rule = ChainRule::PairprimesShift { fixed: Rational::zero(), index: 1 };
        let cert = ChainCertificate::from_rule(q(1, 2), rule, 4).unwrap();
        assert_eq!(cert.terms[1], q(1, 5));
        assert!(validate_chain(&pp, &cert));

        let flat = ChainCertificate::from_terms(vec![q(1, 2), q(1, 2)], ChainRule::None).unwrap();
        assert!(!validate_chain(&pp, &flat));
        let mut forged = ChainCertificate::from_rule(q(1, 2), ChainRule::PairprimesShift { fixed: Rational::zero(), index: 1 }, 2).unwrap();
        forged.rule = ChainRule::PairprimesShift { fixed: Rational::zero(), index: 2 };
        assert!(!validate_chain(&pp, &forged));
    }

    #[test]
    fn accp_examples() {
        let g = Presentation::grams(3);
        let v = accp_element(&g, &q(1, 2), DEFAULT_BUDGET).unwrap();
        assert!(v.fails());
        assert_eq!(v.certificate().unwrap().terms[1], q(1, 4));
        assert_eq!(accp_element(&g, &q(1, 6), DEFAULT_BUDGET).unwrap(), AccpVerdict::Satisfies { reason: SatisfiesReason::GdZero });
        let pp = Presentation::pair_primes(8);
        for b in [q(1, 2), q(1, 3)] {
            let v = accp_element(&pp, &b, DEFAULT_BUDGET).unwrap();
            assert!(validate_chain(&pp, v.certificate().unwrap()));
        }
        assert!(accp_element(&pp, &q(1, 10), DEFAULT_BUDGET).unwrap().satisfies());
        let s = Presentation::cyclic_sq(Rational::new(2, 3), 4).unwrap();
        let v = accp_element(&s, &q(2, 1), DEFAULT_BUDGET).unwrap();
        assert!(validate_chain(&s.with_depth(6), v.certificate().unwrap()));
        let r = Presentation::rank_two(3);
        let v = accp_element(&r, &beta(1).scale(2), DEFAULT_BUDGET).unwrap();
        assert!(validate_chain(&r, v.certificate().unwrap()));
        assert!(accp_element(&r, &beta(2), DEFAULT_BUDGET).unwrap().satisfies());
        assert!(matches!(accp_element(&g, &q(1, 9), DEFAULT_BUDGET), Err(Error::NotAMember(_))));
    }

    #[test]
    fn factor_examples() {
        let g = Presentation::grams(3);
        let f = factor_accp_element(&g, &q(1, 6)).unwrap();
        assert_eq!(f.atoms.len(), 1);
        assert!(factor_accp_element(&g, &q(0, 1)).unwrap().is_empty());
        let f = factor_accp_element(&g, &(q(1, 6).add(&q(1, 20)).unwrap())).unwrap();
        assert_eq!(f.len(), 2);
        assert!(factor_accp_element(&g, &q(1, 2)).is_err());
    }

    #[test]
    fn weak_witness_examples() {
        let g = Presentation::grams(3);
        let s = [q(2, 3), q(1, 2)];
        match weak_accp_witness(&g, &s, DEFAULT_BUDGET).unwrap() {
            WeakAccpWitness::Found { d, s, .. } => {
                assert_eq!(d, q(1, 2));
                assert_eq!(s, q(2, 3));
            }
            other => panic!("{other:?}"),
        }
        let pp = Presentation::pair_primes(8);
        assert!(matches!(
            weak_accp_witness(&pp, &[q(1, 2), q(1, 3)], DEFAULT_BUDGET).unwrap(),
            WeakAccpWitness::NotFound { evidence: NotFoundEvidence::ExhaustiveRefutation { .. } }
        ));
        let atom = pp.generators()[0].clone();
        match weak_accp_witness(&pp, &[atom.clone()], DEFAULT_BUDGET).unwrap() {
            WeakAccpWitness::Found { d, .. } => assert!(d.is_zero()),
            other => panic!("{other:?}"),
        }
        let r = Presentation::rank_two(3);
        let set = [beta(1).scale(2), beta(1).scale(3)];
        match weak_accp_witness(&r, &set, DEFAULT_BUDGET).unwrap() {
            WeakAccpWitness::Found { verdict, .. } => assert!(verdict.satisfies()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gcd_examples() {
        let pp = Presentation::pair_primes(8);
        assert!(gcd_is_zero(&pp, &q(1, 2), &q(1, 3)).unwrap());
        assert!(!gcd_is_zero(&pp, &q(1, 2), &q(1, 2)).unwrap());
        assert!(!gcd_is_zero(&Presentation::grams(3), &q(1, 2), &q(2, 3)).unwrap());
    }

    #[test]
    fn strong_divisor_examples() {
        let pp = Presentation::pair_primes(8);
        assert_eq!(strong_common_divisor(&pp, &q(0, 1), &q(0, 1), DEFAULT_BUDGET).unwrap(), q(0, 1));
        assert_eq!(strong_common_divisor(&pp, &q(1, 2), &q(1, 3), DEFAULT_BUDGET).unwrap(), q(0, 1));
        assert_eq!(strong_common_divisor(&pp, &q(1, 10), &q(1, 10), DEFAULT_BUDGET).unwrap(), q(1, 10));
    }

    #[test]
    fn classification_examples() {
        let t = |p: &Presentation| classify(p, DEFAULT_BUDGET).unwrap().flags();
        assert_eq!(t(&Presentation::grams(4)), [Tri::False, Tri::True, Tri::True, Tri::True]);
        assert_eq!(t(&Presentation::gp(3, 4)), [Tri::False, Tri::True, Tri::True, Tri::True]);
        assert_eq!(t(&Presentation::pair_primes(8)), [Tri::False, Tri::False, Tri::True, Tri::True]);
        assert_eq!(t(&Presentation::cyclic_sq(Rational::new(2, 3), 4).unwrap())[..2], [Tri::False, Tri::True]);
        assert_eq!(t(&Presentation::rank_two(3)), [Tri::False, Tri::True, Tri::True, Tri::True]);
        assert!(classify(&Presentation::zaks(2), DEFAULT_BUDGET).unwrap().respects_implications());
    }
}
