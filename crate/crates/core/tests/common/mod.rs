//! Independent oracles: hard-coded prime tables, brute-force enumeration and
//! residue arithmetic that never call the library's search code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use atomlab::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 30] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113,
];
pub const ODD_PRIMES: [u64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
pub const SIDE1_PRIMES: [u64; 5] = [3, 7, 13, 19, 29];
pub const SIDE2_PRIMES: [u64; 5] = [5, 11, 17, 23, 31];
pub const SPARSE_PRIMES: [u64; 10] = [5, 17, 67, 257, 1031, 4099, 16411, 65537, 262147, 1048583];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn pow_u64(b: u64, e: u32) -> i64 {
    (b as i64).pow(e)
}

/// Generators `1/(base^n p_n)` for the listed primes.
pub fn gd_generators(base: u64, primes: &[u64]) -> Vec<Rational> {
    primes.iter().enumerate().map(|(i, &p)| r(1, pow_u64(base, i as u32 + 1) * p as i64)).collect()
}

/// `1/(p_n p_{n+2})` over all primes.
pub fn pair_prime_generators(depth: usize) -> Vec<Rational> {
    (0..depth).map(|i| r(1, (PRIMES[i] * PRIMES[i + 2]) as i64)).collect()
}

pub fn cyclic_generators(q: &Rational, depth: usize) -> Vec<Rational> {
    (0..=depth).map(|i| q.pow(i as i32)).collect()
}

fn big_denom(q: &Rational) -> BigUint {
    q.denom().to_biguint().expect("positive denominator")
}

/// Exhaustive factorization search over an ordered generator list, pruning any
/// residual whose denominator does not divide the lcm of the remaining denominators.
pub struct DfsOracle {
    gens: Vec<Rational>,
    suffix_lcm: Vec<BigUint>,
}

impl DfsOracle {
    pub fn new(gens: Vec<Rational>) -> Self {
        let mut suffix_lcm = vec![BigUint::one(); gens.len() + 1];
        for i in (0..gens.len()).rev() {
            suffix_lcm[i] = suffix_lcm[i + 1].lcm(&big_denom(&gens[i]));
        }
        DfsOracle { gens, suffix_lcm }
    }

    pub fn gens(&self) -> &[Rational] {
        &self.gens
    }

    fn walk(&self, k: usize, rest: &Rational, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>, first_only: bool) -> bool {
        if rest.is_zero() {
            let mut full = cur.clone();
            full.resize(self.gens.len(), 0);
            out.push(full);
            return first_only;
        }
        if k == self.gens.len() || rest.is_negative() {
            return false;
        }
        if !(&self.suffix_lcm[k] % big_denom(rest)).is_zero() {
            return false;
        }
        let g = &self.gens[k];
        let max = (rest / g).floor().to_u64().expect("small quotient");
        for c in 0..=max {
            cur.push(c);
            let next = rest - &g.scale(c as i64);
            let stop = self.walk(k + 1, &next, cur, out, first_only);
            cur.pop();
            if stop {
                return true;
            }
        }
        false
    }

    /// Every coefficient vector `c` with `Σ c_i g_i = target`.
    pub fn factorizations(&self, target: &Rational) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        self.walk(0, target, &mut Vec::new(), &mut out, false);
        out
    }

    pub fn member(&self, target: &Rational) -> bool {
        if target.is_zero() {
            return true;
        }
        let mut out = Vec::new();
        self.walk(0, target, &mut Vec::new(), &mut out, true)
    }

    pub fn divides(&self, a: &Rational, b: &Rational) -> bool {
        self.member(a) && self.member(&(b - a))
    }

    /// All `d` with `d ∈ M` and `target − d ∈ M`.
    pub fn divisors(&self, target: &Rational) -> BTreeSet<Rational> {
        let mut out = BTreeSet::new();
        for f in self.factorizations(target) {
            sub_sums(&self.gens, &f, 0, Rational::zero(), &mut out);
        }
        out
    }
}

fn sub_sums(gens: &[Rational], f: &[u64], k: usize, acc: Rational, out: &mut BTreeSet<Rational>) {
    if k == f.len() {
        out.insert(acc);
        return;
    }
    for c in 0..=f[k] {
        sub_sums(gens, f, k + 1, &acc + &gens[k].scale(c as i64), out);
    }
}

/// All sums of generators not exceeding `bound`.
pub fn reachable_up_to(gens: &[Rational], bound: &Rational) -> BTreeSet<Rational> {
    let mut set = BTreeSet::from([Rational::zero()]);
    for g in gens {
        let mut next = set.clone();
        for v in &set {
            let mut w = v + g;
            while &w <= bound {
                if !next.insert(w.clone()) {
                    // already reached, and so were its further multiples
                    break;
                }
                w = &w + g;
            }
        }
        set = next;
    }
    set
}

fn residue(q: &Rational, p: u64) -> Option<u64> {
    let p_big = BigInt::from(p);
    let (n, d) = (q.numer(), q.denom());
    if (d % &p_big).is_zero() {
        return None;
    }
    let inv = d.mod_floor(&p_big).modpow(&BigInt::from(p - 2), &p_big);
    (n * inv).mod_floor(&p_big).to_u64()
}

fn is_power_of(mut d: BigUint, base: u64) -> bool {
    let b = BigUint::from(base);
    while (&d % &b).is_zero() {
        d /= &b;
    }
    d.is_one()
}

/// The decomposition `b = q + Σ c_n/(base^n p_n)` over the listed primes, with `q` a
/// `base`-adic fraction and `0 ≤ c_n < p_n`; `None` when `b` lies outside the monoid.
pub fn gd_decompose(base: u64, primes: &[u64], b: &Rational) -> Option<(Rational, Vec<u64>)> {
    if b.is_negative() {
        return None;
    }
    let mut q = b.clone();
    let mut coeffs = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        let scale = pow_u64(base, i as u32 + 1);
        // p·b ≡ c_n / base^n (mod p)
        let c = residue(&(b * &Rational::integer((p as i64) * scale)), p)?;
        q = &q - &r(c as i64, scale * p as i64);
        coeffs.push(c);
    }
    (!q.is_negative() && is_power_of(big_denom(&q), base)).then_some((q, coeffs))
}

/// `q = n0 + Σ n_i/p_i` over the listed primes with `0 ≤ n_i < p_i`.
pub fn p_decompose_oracle(primes: &[u64], q: &Rational) -> Option<(u64, Vec<u64>)> {
    if q.is_negative() {
        return None;
    }
    let mut rest = q.clone();
    let mut coeffs = Vec::new();
    for &p in primes {
        let c = residue(&(q * &Rational::integer(p as i64)), p)?;
        rest = &rest - &r(c as i64, p as i64);
        coeffs.push(c);
    }
    (!rest.is_negative() && rest.is_integer()).then(|| (rest.floor().to_u64().unwrap(), coeffs))
}

/// Random element `Σ c_i g_i` with at most `terms` nonzero summands.
pub fn random_sum(rng: &mut impl Rng, gens: &[Rational], terms: usize, max_coeff: u64) -> Rational {
    let mut total = Rational::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let g = &gens[rng.gen_range(0..gens.len())];
        total = &total + &g.scale(rng.gen_range(1..=max_coeff) as i64);
    }
    total
}

/// Factorization multisets as maps from generator index to multiplicity.
pub fn as_multiset(f: &[u64]) -> BTreeMap<usize, u64> {
    f.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect()
}

pub mod bc {
    use super::*;
    use atomlab::bc::{BivariatePoly, KPoly, KValue};

    pub const S_POOL: [&str; 10] =
        ["1", "2", "-3", "x + y", "1 + x", "1 + y", "2 + x*y", "x + y^2", "x^2 + y", "3 + x - y"];

    fn poly(s: &str) -> BivariatePoly {
        s.parse().unwrap()
    }

    /// A unit of `D`: quotient of two elements of `S`.
    pub fn random_unit(rng: &mut impl Rng) -> KValue {
        let num = KValue::from_poly(&poly(S_POOL[rng.gen_range(0..S_POOL.len())]));
        if rng.gen_bool(0.7) {
            return num;
        }
        let den = KValue::from_poly(&poly(S_POOL[rng.gen_range(0..S_POOL.len())]));
        num.div(&den).unwrap()
    }

    /// `u · x^j · y^k` with `j, k` drawn from `lo..=hi`.
    pub fn random_k(rng: &mut impl Rng, lo: i64, hi: i64) -> KValue {
        random_unit(rng).mul(&KValue::monomial(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)))
    }

    pub fn random_d(rng: &mut impl Rng) -> KValue {
        let a = random_k(rng, 0, 2);
        if rng.gen_bool(0.5) {
            a.add(&random_k(rng, 0, 2))
        } else {
            a
        }
    }

    pub fn random_kpoly(rng: &mut impl Rng, max_deg: usize, lo: i64, hi: i64) -> KPoly {
        let deg = rng.gen_range(0..=max_deg);
        KPoly::new(
            (0..=deg)
                .map(|i| if i < deg && rng.gen_bool(0.3) { KValue::Zero } else { random_k(rng, lo, hi) })
                .collect(),
        )
    }

    /// Coefficients of `g` after substituting rational values for `x` and `y`.
    pub fn specialize(g: &KPoly, x: &Rational, y: &Rational) -> Option<Vec<Rational>> {
        g.coeffs().iter().map(|c| if c.is_zero() { Some(Rational::zero()) } else { c.eval(x, y) }).collect()
    }

    pub fn uni_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, p) in a.iter().enumerate() {
            for (j, q) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(p * q);
            }
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn uni_eval(a: &[Rational], t: &Rational) -> Rational {
        a.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn trimmed(mut a: Vec<Rational>) -> Vec<Rational> {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }
}
