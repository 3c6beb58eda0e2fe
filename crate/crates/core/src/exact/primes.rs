use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin over big integers with the first thirteen prime bases.
///
/// Deterministic below 3.3·10²⁴; above that it is a strong probable-prime test.
pub fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn cache() -> &'static RwLock<Vec<u64>> {
    static CACHE: OnceLock<RwLock<Vec<u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![2, 3]))
}

fn ensure_primes(count: usize) {
    if cache().read().expect("prime cache poisoned").len() >= count {
        return;
    }
    let mut guard = cache().write().expect("prime cache poisoned");
    let mut candidate = *guard.last().expect("cache is seeded");
    while guard.len() < count {
        candidate += 2;
        if is_prime_u64(candidate) {
            guard.push(candidate);
        }
    }
}

/// The `n`-th prime (1-indexed): 2, 3, 5, …
pub fn nth_rational_prime(n: usize) -> u64 {
    assert!(n >= 1, "prime indices start at 1");
    ensure_primes(n);
    cache().read().expect("prime cache poisoned")[n - 1]
}

/// Position of `p` in the sequence of all primes.
pub fn prime_pi_index(p: u64) -> Option<usize> {
    if !is_prime_u64(p) {
        return None;
    }
    let mut count = 64;
    loop {
        ensure_primes(count);
        let guard = cache().read().expect("prime cache poisoned");
        if *guard.last().unwrap() >= p {
            return guard.binary_search(&p).ok().map(|i| i + 1);
        }
        drop(guard);
        count *= 2;
    }
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_after(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// A strictly increasing sequence of primes `p_1 < p_2 < …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PrimeSeq {
    AllPrimes,
    OddPrimes,
    PrimesExcluding { p: u64 },
    /// `p_n` is the smallest prime exceeding `ratio^n`.
    Sparse { ratio: u64 },
    Explicit { list: Vec<u64> },
    /// Odd primes split alternately: side 1 takes 3, 7, 13, 19, …; side 2 takes 5, 11, 17, 23, …
    Interleaved { side: u8 },
}

impl PrimeSeq {
    pub fn sparse() -> Self {
        PrimeSeq::Sparse { ratio: 4 }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PrimeSeq::PrimesExcluding { p } if !is_prime_u64(*p) => {
                Err(Error::InvalidPresentation(format!("{p} is not prime")))
            }
            PrimeSeq::Sparse { ratio } if *ratio < 4 => Err(Error::InvalidPresentation(
                "sparse ratio must be at least 4".into(),
            )),
            PrimeSeq::Explicit { list } => {
                if list.is_empty() {
                    return Err(Error::InvalidPresentation("empty prime list".into()));
                }
                if !list.iter().all(|&p| is_prime_u64(p)) || !list.windows(2).all(|w| w[0] < w[1]) {
                    return Err(Error::InvalidPresentation(
                        "explicit primes must be strictly increasing primes".into(),
                    ));
                }
                Ok(())
            }
            PrimeSeq::Interleaved { side } if *side != 1 && *side != 2 => {
                Err(Error::InvalidPresentation("interleaved side must be 1 or 2".into()))
            }
            _ => Ok(()),
        }
    }

    /// Number of available terms (`None` for infinite sequences).
    pub fn len_hint(&self) -> Option<usize> {
        match self {
            PrimeSeq::Explicit { list } => Some(list.len()),
            _ => None,
        }
    }

    /// The `n`-th term (1-indexed).
    ///
    /// Panics for an explicit list shorter than `n` and for sparse terms beyond `u64`.
    pub fn nth(&self, n: usize) -> u64 {
        assert!(n >= 1, "prime indices start at 1");
        match self {
            PrimeSeq::AllPrimes => nth_rational_prime(n),
            PrimeSeq::OddPrimes => nth_rational_prime(n + 1),
            PrimeSeq::PrimesExcluding { p } => {
                let q = nth_rational_prime(n);
                if q >= *p {
                    nth_rational_prime(n + 1)
                } else {
                    q
                }
            }
            PrimeSeq::Sparse { ratio } => {
                let bound = ratio
                    .checked_pow(n as u32)
                    .expect("sparse prime exceeds u64; use sparse_prime_sequence");
                next_prime_after(bound)
            }
            PrimeSeq::Explicit { list } => list[n - 1],
            PrimeSeq::Interleaved { side } => {
                let odd_index = 2 * n - if *side == 1 { 1 } else { 0 };
                nth_rational_prime(odd_index + 1)
            }
        }
    }

    pub fn prefix(&self, count: usize) -> Vec<u64> {
        (1..=count).map(|n| self.nth(n)).collect()
    }

    /// Index `n` with `nth(n) == p`, if `p` occurs in the sequence.
    pub fn index_of(&self, p: u64) -> Option<usize> {
        match self {
            PrimeSeq::AllPrimes => prime_pi_index(p),
            PrimeSeq::OddPrimes => prime_pi_index(p).filter(|&i| i > 1).map(|i| i - 1),
            PrimeSeq::PrimesExcluding { p: skip } => {
                let i = prime_pi_index(p)?;
                match p.cmp(skip) {
                    std::cmp::Ordering::Less => Some(i),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(i - 1),
                }
            }
            PrimeSeq::Sparse { ratio } => {
                let mut n = 1usize;
                let mut bound = *ratio;
                while bound < p {
                    if next_prime_after(bound) == p {
                        return Some(n);
                    }
                    n += 1;
                    bound = bound.checked_mul(*ratio)?;
                }
                None
            }
            PrimeSeq::Explicit { list } => list.iter().position(|&q| q == p).map(|i| i + 1),
            PrimeSeq::Interleaved { side } => {
                let odd_index = prime_pi_index(p).filter(|&i| i > 1)? - 1;
                match (side, odd_index % 2) {
                    (1, 1) => Some((odd_index + 1) / 2),
                    (2, 0) => Some(odd_index / 2),
                    _ => None,
                }
            }
        }
    }
}

/// The `n`-th term of `seq`; deterministic and cached.
pub fn nth_prime(seq: &PrimeSeq, n: usize) -> u64 {
    seq.nth(n)
}

/// `p_1 < … < p_count` with `p_n` the smallest prime exceeding `4^n`.
pub fn sparse_prime_sequence(count: usize) -> Vec<BigUint> {
    let four = BigUint::from(4u32);
    let mut bound = BigUint::one();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        bound *= &four;
        let mut c = &bound + 1u32;
        while !is_probable_prime_big(&c) {
            c += 1u32;
        }
        out.push(c);
    }
    out
}

/// Exact evidence that the reciprocal sum of the sparse primes stays below `1/3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseBound {
    pub count: usize,
    pub partial_sum: Rational,
    /// `Σ_{n > count} 4^{-n} = 4^{-count} / 3`, an upper bound for the unseen reciprocals.
    pub tail_bound: Rational,
    pub holds: bool,
}

pub fn sparse_reciprocal_bound(count: usize) -> SparseBound {
    use num_bigint::BigInt;
    let primes = sparse_prime_sequence(count);
    let partial_sum: Rational = primes
        .iter()
        .map(|p| Rational::from_bigs(BigInt::one(), BigInt::from(p.clone())))
        .sum();
    let four_k = BigInt::from(4u32).pow(count as u32);
    let tail_bound = Rational::from_bigs(BigInt::one(), four_k * 3);
    let holds = &partial_sum + &tail_bound < Rational::new(1, 3);
    SparseBound { count, partial_sum, tail_bound, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn nth_prime_examples() {
        assert_eq!(nth_prime(&PrimeSeq::AllPrimes, 1), 2);
        assert_eq!(nth_prime(&PrimeSeq::OddPrimes, 3), 7);
        assert_eq!(nth_prime(&PrimeSeq::PrimesExcluding { p: 2 }, 4), 11);
        assert_eq!(PrimeSeq::PrimesExcluding { p: 5 }.prefix(4), vec![2, 3, 7, 11]);
        assert_eq!(PrimeSeq::Interleaved { side: 1 }.prefix(4), vec![3, 7, 13, 19]);
        assert_eq!(PrimeSeq::Interleaved { side: 2 }.prefix(4), vec![5, 11, 17, 23]);
        assert_eq!(PrimeSeq::sparse().prefix(4), vec![5, 17, 67, 257]);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), trial_division(n), "n = {n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn sequences_are_increasing_primes() {
        let kinds = [
            PrimeSeq::AllPrimes,
            PrimeSeq::OddPrimes,
            PrimeSeq::PrimesExcluding { p: 2 },
            PrimeSeq::PrimesExcluding { p: 7 },
            PrimeSeq::Interleaved { side: 1 },
            PrimeSeq::Interleaved { side: 2 },
        ];
        for seq in &kinds {
            let terms = seq.prefix(10_000);
            assert!(terms.windows(2).all(|w| w[0] < w[1]));
            assert!(terms.iter().all(|&p| is_prime_u64(p)));
            for (i, &p) in terms.iter().enumerate().step_by(97) {
                assert_eq!(seq.index_of(p), Some(i + 1));
            }
        }
        assert_eq!(PrimeSeq::PrimesExcluding { p: 7 }.index_of(7), None);
        assert_eq!(PrimeSeq::Interleaved { side: 1 }.index_of(5), None);
        assert_eq!(PrimeSeq::sparse().index_of(67), Some(3));
        assert_eq!(PrimeSeq::sparse().index_of(71), None);
    }

    #[test]
    fn sparse_examples() {
        let three: Vec<u64> = sparse_prime_sequence(3).iter().map(|p| p.to_u64().unwrap()).collect();
        assert_eq!(three, vec![5, 17, 67]);
        let one = sparse_reciprocal_bound(1);
        assert_eq!(one.partial_sum, Rational::new(1, 5));
        assert_eq!(one.tail_bound, Rational::new(1, 12));
        assert!(one.holds);
        let four = sparse_reciprocal_bound(4);
        let expected = Rational::new(1, 5) + Rational::new(1, 17) + Rational::new(1, 67) + Rational::new(1, 257);
        assert_eq!(four.partial_sum, expected);
        assert!(four.partial_sum < Rational::new(1, 3));
    }

    #[test]
    fn sparse_bound_holds_to_one_hundred() {
        let primes = sparse_prime_sequence(100);
        let mut bound = BigUint::one();
        for p in &primes {
            bound *= 4u32;
            assert!(p > &bound);
        }
        use num_bigint::BigInt;
        let mut partial = Rational::zero();
        let mut four_k = BigInt::one();
        for p in &primes {
            partial = partial + Rational::from_bigs(BigInt::one(), BigInt::from(p.clone()));
            four_k *= 4;
            let tail = Rational::from_bigs(BigInt::one(), &four_k * 3);
            assert!(&partial + &tail < Rational::new(1, 3));
        }
        assert!(sparse_reciprocal_bound(100).holds);
    }
}
