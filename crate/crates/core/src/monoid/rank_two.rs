//! The rank-two monoid generated by `A ∪ B` over the sparse primes `5, 17, 67, …`.
//!
//! `A` consists of the sums `1/p_k + Σ_{i∈J} 1/p_i` with `k ∈ J`, i.e. coefficient
//! vectors with entries in `{0, 1, 2}` and exactly one `2`. `B = {β_ℓ = β − Σ_{i≤ℓ} 1/p_i}`
//! with `β_0 = β`.

use serde::Serialize;

use super::value::MonoidValue;
use crate::exact::{PrimeSeq, Rational};

pub fn sparse_prime(i: usize) -> u64 {
    PrimeSeq::sparse().nth(i)
}

/// `Σ_{i ≤ ℓ} 1/p_i`.
pub fn beta_offset(l: usize) -> Rational {
    (1..=l).map(|i| Rational::recip_of(sparse_prime(i))).sum()
}

/// `β_ℓ` as a rank-two value.
pub fn beta(l: usize) -> MonoidValue {
    MonoidValue::RankTwo { beta: 1, q: -beta_offset(l) }
}

/// A generator of `A`: indices (1-based) in `support`, with `double ∈ support`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AVector {
    pub support: Vec<usize>,
    pub double: usize,
}

impl AVector {
    pub fn value(&self) -> Rational {
        let mut total: Rational = self.support.iter().map(|&i| Rational::recip_of(sparse_prime(i))).sum();
        total += &Rational::recip_of(sparse_prime(self.double));
        total
    }

    pub fn coefficients(&self, len: usize) -> Vec<u64> {
        let mut v = vec![0u64; len];
        for &i in &self.support {
            v[i - 1] += 1;
        }
        v[self.double - 1] += 1;
        v
    }
}

/// All `A`-generators with indices `≤ depth`, ordered by support bitmask then doubled index.
pub fn a_vectors(depth: usize) -> Vec<AVector> {
    assert!(depth < 24, "A-generator enumeration is exponential in the depth");
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << depth) {
        let support: Vec<usize> = (0..depth).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        for &k in &support {
            out.push(AVector { support: support.clone(), double: k });
        }
    }
    out
}

pub fn generators(depth: usize) -> Vec<MonoidValue> {
    let mut gens: Vec<MonoidValue> = a_vectors(depth)
        .iter()
        .map(|a| MonoidValue::RankTwo { beta: 0, q: a.value() })
        .collect();
    gens.extend((0..=depth).map(beta));
    gens
}

/// Whether the coefficient vector `v` is a sum of `A`-vectors.
///
/// This holds iff `v = 0`, or at least two entries are `≥ 2`, or exactly one entry
/// is `≥ 2`, that entry is even, and every other entry is at most 1.
pub fn a_span_contains(v: &[u64]) -> bool {
    let big: Vec<usize> = (0..v.len()).filter(|&i| v[i] >= 2).collect();
    match big.len() {
        0 => v.iter().all(|&x| x == 0),
        1 => v[big[0]] % 2 == 0,
        _ => true,
    }
}

/// An explicit decomposition of `v` into `A`-vectors, when one exists.
pub fn a_span_witness(v: &[u64]) -> Option<Vec<AVector>> {
    if !a_span_contains(v) {
        return None;
    }
    let mut rest = v.to_vec();
    let mut out = Vec::new();
    let mut take = |rest: &mut Vec<u64>, support: Vec<usize>, double: usize| {
        for &i in &support {
            rest[i] -= 1;
        }
        rest[double] -= 1;
        out.push(AVector { support: support.iter().map(|i| i + 1).collect(), double: double + 1 });
    };
    let big: Vec<usize> = (0..v.len()).filter(|&i| v[i] >= 2).collect();
    if big.len() == 1 {
        let k = big[0];
        let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] > 0).collect();
        take(&mut rest, support, k);
    } else if !big.is_empty() {
        let odd: Vec<usize> = (0..v.len()).filter(|&i| v[i] % 2 == 1).collect();
        if let Some(&k0) = big.iter().find(|&&i| v[i] % 2 == 0) {
            let mut support = odd.clone();
            support.push(k0);
            support.sort();
            take(&mut rest, support, k0);
        } else {
            let (j, k) = (big[0], big[1]);
            take(&mut rest, odd, j);
            take(&mut rest, vec![j, k], k);
        }
    }
    for i in 0..rest.len() {
        debug_assert!(rest[i] % 2 == 0);
        while rest[i] > 0 {
            take(&mut rest, vec![i], i);
        }
    }
    Some(out)
}
