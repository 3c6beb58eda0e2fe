//! Kernel search against brute-force oracles on random elements.

mod common;

use std::collections::BTreeSet;

use atomlab::decompose::{grams_decompose, p_decompose};
use atomlab::monoid::{Kernel, MonoidValue, Presentation};
use atomlab::Rational;
use common::*;
use proptest::prelude::*;

fn coeffs(max: u64, len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..=max, len)
}

fn combine(gens: &[Rational], c: &[u64]) -> Rational {
    gens.iter().zip(c).fold(Rational::zero(), |acc, (g, &k)| &acc + &g.scale(k as i64))
}

fn kernel_factorizations(k: &Kernel, q: &Rational) -> BTreeSet<Vec<u64>> {
    let gens = k.generators().to_vec();
    k.factorizations(&MonoidValue::Puiseux(q.clone()))
        .unwrap()
        .into_iter()
        .map(|f| gens.iter().map(|g| f.atoms.get(g).copied().unwrap_or(0)).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pair_primes_factorizations_match(c in coeffs(2, 4)) {
        let gens = pair_prime_generators(4);
        let k = Kernel::new(&Presentation::pair_primes(4)).unwrap();
        let q = combine(&gens, &c);
        let want: BTreeSet<_> = DfsOracle::new(gens).factorizations(&q).into_iter().collect();
        prop_assert_eq!(kernel_factorizations(&k, &q), want);
    }

    #[test]
    fn explicit_factorizations_match(c in coeffs(4, 2)) {
        let gens = vec![r(2, 5), r(3, 7)];
        let k = Kernel::new(&Presentation::explicit(gens.clone()).unwrap()).unwrap();
        let q = combine(&gens, &c);
        let want: BTreeSet<_> = DfsOracle::new(gens).factorizations(&q).into_iter().collect();
        prop_assert!(want.contains(&c));
        prop_assert_eq!(kernel_factorizations(&k, &q), want);
    }

    #[test]
    fn length_set_matches_oracle(c in coeffs(2, 3)) {
        let gens = gd_generators(2, &ODD_PRIMES[..3]);
        let k = Kernel::new(&Presentation::grams(3)).unwrap();
        let q = combine(&gens, &c);
        let want: BTreeSet<u64> = DfsOracle::new(gens).factorizations(&q).iter().map(|f| f.iter().sum()).collect();
        prop_assert_eq!(k.length_set(&MonoidValue::Puiseux(q)).unwrap(), want);
    }

    #[test]
    fn grams_decomposition_reconstructs(c in coeffs(30, 6), j in 0u32..6, a in 0i64..8) {
        let primes = &ODD_PRIMES[..6];
        let gens = gd_generators(2, primes);
        let b = &r(a, 1 << j) + &combine(&gens, &c);
        let d = grams_decompose(&Presentation::grams(6), &b).unwrap();
        let (q, oc) = gd_decompose(2, primes, &b).unwrap();
        prop_assert_eq!(&d.q_part, &q);
        for (i, c) in oc.iter().enumerate() {
            prop_assert_eq!(d.coeffs.get(&(i + 1)).copied().unwrap_or(0), *c);
        }
    }

    #[test]
    fn p_decomposition_matches_residues(n0 in 0u64..4, c in (0u64..5, 0u64..17, 0u64..67, 0u64..257)) {
        let q = &Rational::integer(n0 as i64)
            + &(&(&r(c.0 as i64, 5) + &r(c.1 as i64, 17)) + &(&r(c.2 as i64, 67) + &r(c.3 as i64, 257)));
        let d = p_decompose(&q).unwrap();
        prop_assert_eq!(d.reconstruct(), q.clone());
        prop_assert_eq!(p_decompose_oracle(&SPARSE_PRIMES[..4], &q), Some((d.n0, d.vector(4))));
    }

    #[test]
    fn divides_is_transitive_on_members(a in coeffs(2, 4), b in coeffs(2, 4), c in coeffs(2, 4)) {
        let gens = gd_generators(3, &[2, 5, 7, 11]);
        let k = Kernel::new(&Presentation::gp(3, 4)).unwrap();
        let x = combine(&gens, &a);
        let y = &x + &combine(&gens, &b);
        let z = &y + &combine(&gens, &c);
        let v = |q: &Rational| MonoidValue::Puiseux(q.clone());
        prop_assert!(k.divides(&v(&x), &v(&y)).unwrap());
        prop_assert!(k.divides(&v(&y), &v(&z)).unwrap());
        prop_assert!(k.divides(&v(&x), &v(&z)).unwrap());
    }
}

#[test]
fn non_members_are_rejected() {
    let k = Kernel::new(&Presentation::pair_primes(6)).unwrap();
    let oracle = DfsOracle::new(pair_prime_generators(6));
    for q in [r(1, 7), r(1, 11), r(2, 15), r(1, 100)] {
        assert_eq!(k.member(&MonoidValue::Puiseux(q.clone())).unwrap(), oracle.member(&q), "{q}");
    }
}
