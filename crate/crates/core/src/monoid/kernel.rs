//! Decision kernel over a truncated presentation: membership, divisibility, atoms,
//! factorizations, length sets and common divisors.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::knapsack::{Budget, Knapsack};
use super::presentation::{Family, Presentation};
use super::rank_two::beta_offset;
use super::value::MonoidValue;
use super::zaks;
use crate::decompose::{grams_member, in_a_span_full, in_a_span_truncated, squarefree_support};
use crate::error::{Error, Result};
use crate::exact::rational::denom_unsigned;
use crate::exact::{PrimeSeq, Rational};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A multiset of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factorization {
    pub atoms: BTreeMap<MonoidValue, u64>,
}

impl Factorization {
    pub fn empty() -> Self {
        Factorization { atoms: BTreeMap::new() }
    }

    pub fn len(&self) -> u64 {
        self.atoms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The weighted sum of the atoms, starting from `zero`.
    pub fn value(&self, zero: &MonoidValue) -> MonoidValue {
        self.atoms
            .iter()
            .fold(zero.clone(), |acc, (a, &k)| acc.add(&a.scale(k)).expect("atoms share the tag"))
    }
}

enum Backend {
    Knapsack { lcm: u128, solver: Knapsack },
    RankTwo { offsets: Vec<Rational> },
    Zaks,
}

/// A presentation prepared for repeated queries.
pub struct Kernel {
    pres: Presentation,
    gens: Vec<MonoidValue>,
    backend: Backend,
    budget: u64,
    atoms: OnceLock<Vec<MonoidValue>>,
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> Result<u128> {
    let mut l = BigUint::one();
    for v in values {
        l = l.lcm(&denom_unsigned(v));
    }
    l.to_u128().ok_or(Error::Overflow)
}

impl Kernel {
    pub fn new(pres: &Presentation) -> Result<Self> {
        pres.validate()?;
        let gens = pres.generators();
        let backend = match pres.family {
            Family::RankTwoP => Backend::RankTwo { offsets: (0..=pres.depth).map(beta_offset).collect() },
            Family::Zaks => Backend::Zaks,
            _ => {
                let rats: Vec<&Rational> = gens.iter().map(|g| g.as_rational().expect("puiseux")).collect();
                let lcm = lcm_of_denominators(rats.iter().copied())?;
                let weights = rats
                    .iter()
                    .map(|g| g.scaled_to_u128(lcm).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()?;
                Backend::Knapsack { lcm, solver: Knapsack::new(&weights) }
            }
        };
        Ok(Kernel { pres: pres.clone(), gens, backend, budget: DEFAULT_BUDGET, atoms: OnceLock::new() })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn generators(&self) -> &[MonoidValue] {
        &self.gens
    }

    pub fn zero(&self) -> MonoidValue {
        self.pres.zero()
    }

    fn fresh_budget(&self) -> Budget {
        Budget::new(self.budget)
    }

    /// Membership in the truncated monoid.
    pub fn member(&self, v: &MonoidValue) -> Result<bool> {
        self.member_in(v, &mut self.fresh_budget())
    }

    pub fn member_in(&self, v: &MonoidValue, budget: &mut Budget) -> Result<bool> {
        self.pres.check_tag(v)?;
        match (&self.backend, v) {
            (Backend::Knapsack { lcm, solver }, MonoidValue::Puiseux(q)) => {
                if q.is_negative() {
                    return Ok(false);
                }
                if !(BigUint::from(*lcm) % denom_unsigned(q) == BigUint::from(0u32)) {
                    return Ok(false);
                }
                let target = q.scaled_to_u128(*lcm).ok_or(Error::Overflow)?;
                solver.feasible(target, budget)
            }
            (Backend::RankTwo { offsets }, MonoidValue::RankTwo { beta, q }) => {
                rank_two_member(offsets, *beta, q, self.pres.depth, budget)
            }
            (Backend::Zaks, MonoidValue::IntVec(x)) => {
                budget.tick()?;
                Ok(zaks::is_member(x))
            }
            _ => Err(Error::TagMismatch),
        }
    }

    /// `a | b`: `b − a` is admissible and a member.
    pub fn divides(&self, a: &MonoidValue, b: &MonoidValue) -> Result<bool> {
        self.divides_in(a, b, &mut self.fresh_budget())
    }

    pub fn divides_in(&self, a: &MonoidValue, b: &MonoidValue, budget: &mut Budget) -> Result<bool> {
        self.pres.check_tag(a)?;
        self.pres.check_tag(b)?;
        match b.try_sub(a)? {
            Some(d) => self.member_in(&d, budget),
            None => Ok(false),
        }
    }

    /// Generators not divisible by any other generator.
    pub fn atoms(&self) -> Result<Vec<MonoidValue>> {
        if let Some(a) = self.atoms.get() {
            return Ok(a.clone());
        }
        let mut budget = self.fresh_budget();
        let mut out = Vec::new();
        for g in &self.gens {
            let mut irreducible = !g.is_zero();
            for h in &self.gens {
                if h != g && self.divides_in(h, g, &mut budget)? {
                    irreducible = false;
                    break;
                }
            }
            if irreducible {
                out.push(g.clone());
            }
        }
        let _ = self.atoms.set(out.clone());
        Ok(out)
    }

    fn require_member(&self, v: &MonoidValue, budget: &mut Budget) -> Result<()> {
        if self.member_in(v, budget)? {
            Ok(())
        } else {
            Err(Error::NotAMember(v.to_string()))
        }
    }

    /// All factorizations of `b` into atoms of the truncated monoid.
    pub fn factorizations(&self, b: &MonoidValue) -> Result<Vec<Factorization>> {
        let mut budget = self.fresh_budget();
        self.require_member(b, &mut budget)?;
        let atoms = self.atoms()?;
        let mut out: Vec<Factorization> = match (&self.backend, b) {
            (Backend::Knapsack { lcm, .. }, MonoidValue::Puiseux(q)) => {
                let weights = atoms
                    .iter()
                    .map(|a| a.as_rational().unwrap().scaled_to_u128(*lcm).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()?;
                let target = q.scaled_to_u128(*lcm).ok_or(Error::Overflow)?;
                Knapsack::new(&weights)
                    .solutions(target, &mut budget)?
                    .into_iter()
                    .map(|coeffs| to_factorization(&atoms, &coeffs))
                    .collect()
            }
            (Backend::Zaks, MonoidValue::IntVec(x)) => {
                let gens = self.gens.clone();
                zaks::combinations(x, &mut budget)?
                    .into_iter()
                    .map(|c| to_factorization(&gens, &c.flat()))
                    .collect()
            }
            _ => {
                let mut memo = HashMap::new();
                generic_factorizations(self, b, 0, &atoms, &mut memo, &mut budget)?
                    .into_iter()
                    .map(|coeffs| to_factorization(&atoms, &coeffs))
                    .collect()
            }
        };
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn length_set(&self, b: &MonoidValue) -> Result<BTreeSet<u64>> {
        Ok(self.factorizations(b)?.iter().map(Factorization::len).collect())
    }

    /// Every common divisor of `s` in the truncated monoid, in increasing order.
    pub fn common_divisors(&self, s: &[MonoidValue]) -> Result<Vec<MonoidValue>> {
        if s.is_empty() {
            return Err(Error::PreconditionViolated("empty set".into()));
        }
        let mut budget = self.fresh_budget();
        for x in s {
            self.require_member(x, &mut budget)?;
        }
        let atoms = self.atoms()?;
        let zero = self.zero();
        let mut seen = BTreeSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(d) = queue.pop_front() {
            budget.tick()?;
            for a in &atoms {
                let next = d.add(a)?;
                if seen.contains(&next) {
                    continue;
                }
                let mut common = true;
                for x in s {
                    if !self.divides_in(&next, x, &mut budget)? {
                        common = false;
                        break;
                    }
                }
                if common {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Membership in the untruncated monoid where an exact decider exists.
    ///
    /// Grams-type families use the canonical decomposition; pair-primes and cyclic
    /// semirings are decided at a depth read off the denominator; `⟨A⟩` uses the
    /// closed-form characterization. `None` means no exact decider is available.
    pub fn member_full(&self, v: &MonoidValue) -> Result<Option<bool>> {
        self.pres.check_tag(v)?;
        match (&self.pres.family, v) {
            (Family::Explicit { gens }, _) => {
                let full = self.pres.with_depth(gens.len());
                Ok(Some(Kernel::new(&full)?.with_budget(self.budget).member(v)?))
            }
            (Family::Grams { .. } | Family::Gp { .. } | Family::IntersectG { .. }, MonoidValue::Puiseux(q)) => {
                Ok(Some(grams_member(&self.pres, q)?))
            }
            (Family::PairPrimes, MonoidValue::Puiseux(q)) => {
                if q.is_negative() {
                    return Ok(Some(false));
                }
                let Some(support) = squarefree_support(denom_unsigned(q), &PrimeSeq::AllPrimes) else {
                    return Ok(Some(false));
                };
                let k = support.last().map(|&(i, _)| i).unwrap_or(0);
                let depth = self.pres.depth.max(k).max(2);
                self.member_at_depth(depth, v).map(Some)
            }
            (Family::CyclicSq { q: base }, MonoidValue::Puiseux(q)) => {
                if q.is_negative() {
                    return Ok(Some(false));
                }
                let d = denom_unsigned(base);
                let den = denom_unsigned(q);
                let mut power = BigUint::one();
                let mut k = 0usize;
                while &power % &den != BigUint::from(0u32) {
                    let next = &power * &d;
                    if next.gcd(&den) == power.gcd(&den) {
                        return Ok(Some(false));
                    }
                    power = next;
                    k += 1;
                }
                self.member_at_depth(self.pres.depth.max(k), v).map(Some)
            }
            (Family::RankTwoP, MonoidValue::RankTwo { beta: 0, q }) => Ok(Some(in_a_span_full(q))),
            _ => Ok(None),
        }
    }

    fn member_at_depth(&self, depth: usize, v: &MonoidValue) -> Result<bool> {
        if depth == self.pres.depth {
            self.member(v)
        } else {
            Kernel::new(&self.pres.with_depth(depth))?.with_budget(self.budget).member(v)
        }
    }

    /// Exact membership when available, truncated membership otherwise.
    pub fn member_best(&self, v: &MonoidValue) -> Result<bool> {
        match self.member_full(v)? {
            Some(b) => Ok(b),
            None => self.member(v),
        }
    }
}

fn to_factorization(atoms: &[MonoidValue], coeffs: &[u64]) -> Factorization {
    Factorization {
        atoms: atoms
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c > 0)
            .map(|(a, &c)| (a.clone(), c))
            .collect(),
    }
}

type Memo = HashMap<(MonoidValue, usize), Vec<Vec<u64>>>;

fn generic_factorizations(
    kernel: &Kernel,
    b: &MonoidValue,
    start: usize,
    atoms: &[MonoidValue],
    memo: &mut Memo,
    budget: &mut Budget,
) -> Result<Vec<Vec<u64>>> {
    if b.is_zero() {
        return Ok(vec![vec![0; atoms.len()]]);
    }
    if let Some(hit) = memo.get(&(b.clone(), start)) {
        return Ok(hit.clone());
    }
    budget.tick()?;
    let mut out = Vec::new();
    for i in start..atoms.len() {
        let Some(rest) = b.try_sub(&atoms[i])? else { continue };
        if !rest.is_zero() && !kernel.member_in(&rest, budget)? {
            continue;
        }
        for mut f in generic_factorizations(kernel, &rest, i, atoms, memo, budget)? {
            f[i] += 1;
            out.push(f);
        }
    }
    memo.insert((b.clone(), start), out.clone());
    Ok(out)
}

/// Truncated rank-two membership: spend the β-coefficient on a multiset of `β_ℓ`
/// (`ℓ ≤ N`) and test the rational residual for membership in `⟨A⟩`.
fn rank_two_member(offsets: &[Rational], beta: u64, q: &Rational, depth: usize, budget: &mut Budget) -> Result<bool> {
    let mut counts = vec![0u64; offsets.len()];
    rank_two_search(offsets, beta, q.clone(), 0, &mut counts, depth, budget)
}

fn rank_two_search(
    offsets: &[Rational],
    remaining: u64,
    residual: Rational,
    idx: usize,
    counts: &mut Vec<u64>,
    depth: usize,
    budget: &mut Budget,
) -> Result<bool> {
    if remaining == 0 {
        budget.tick()?;
        return Ok(!residual.is_negative() && in_a_span_truncated(&residual, depth));
    }
    if idx + 1 == offsets.len() {
        let r = residual + offsets[idx].scale(remaining as i64);
        return rank_two_search(offsets, 0, r, idx + 1, counts, depth, budget);
    }
    for k in (0..=remaining).rev() {
        counts[idx] = k;
        let r = &residual + &offsets[idx].scale(k as i64);
        if rank_two_search(offsets, remaining - k, r, idx + 1, counts, depth, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn generators(pres: &Presentation) -> Vec<MonoidValue> {
    pres.generators()
}

pub fn member(pres: &Presentation, v: &MonoidValue) -> Result<bool> {
    Kernel::new(pres)?.member(v)
}

pub fn divides(pres: &Presentation, a: &MonoidValue, b: &MonoidValue) -> Result<bool> {
    Kernel::new(pres)?.divides(a, b)
}

pub fn atoms(pres: &Presentation) -> Result<Vec<MonoidValue>> {
    Kernel::new(pres)?.atoms()
}

pub fn factorizations(pres: &Presentation, b: &MonoidValue) -> Result<Vec<Factorization>> {
    Kernel::new(pres)?.factorizations(b)
}

pub fn length_set(pres: &Presentation, b: &MonoidValue) -> Result<BTreeSet<u64>> {
    Kernel::new(pres)?.length_set(b)
}

pub fn common_divisors(pres: &Presentation, s: &[MonoidValue]) -> Result<Vec<MonoidValue>> {
    Kernel::new(pres)?.common_divisors(s)
}
