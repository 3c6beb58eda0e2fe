//! Field laws in K = ℚ(x, y), valuation additivity and overring expansions.

mod common;

use atomlab::bc::{expand, in_d1, in_d2, KPoly, KValue, Overring};
use common::bc::*;
use common::rng;
use proptest::prelude::*;

fn k_value() -> impl Strategy<Value = KValue> {
    any::<u64>().prop_map(|seed| random_k(&mut rng(seed), -3, 3))
}

fn k_poly() -> impl Strategy<Value = KPoly> {
    any::<u64>().prop_map(|seed| random_kpoly(&mut rng(seed), 3, -2, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_laws(a in k_value(), b in k_value(), c in k_value()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&a.inv().unwrap()), KValue::one());
    }

    #[test]
    fn valuations_are_additive(a in k_value(), b in k_value()) {
        let (ja, ka) = a.valuations().unwrap();
        let (jb, kb) = b.valuations().unwrap();
        prop_assert_eq!(a.mul(&b).valuations(), Some((ja + jb, ka + kb)));
        prop_assert_eq!(a.inv().unwrap().valuations(), Some((-ja, -ka)));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in k_value(), b in k_value()) {
        let (x, y) = (common::r(3, 7), common::r(5, 11));
        if let (Some(ea), Some(eb), Some(eab)) = (a.eval(&x, &y), b.eval(&x, &y), a.mul(&b).eval(&x, &y)) {
            prop_assert_eq!(&ea * &eb, eab);
        }
    }

    #[test]
    fn expansions_round_trip(h in k_value()) {
        for ring in [Overring::D1, Overring::D2] {
            let member = if ring == Overring::D1 { in_d1(&h) } else { in_d2(&h) };
            match expand(ring, &h) {
                Some(e) => {
                    prop_assert!(member);
                    prop_assert!(e.coefficients_in_d());
                    prop_assert_eq!(e.evaluate(), h.clone());
                }
                None => prop_assert!(!member),
            }
        }
    }

    #[test]
    fn kpoly_division_by_x_x_minus_1(h in k_poly()) {
        let g = h.mul(&KPoly::x_x_minus_1());
        let (q, r) = g.div_rem(&KPoly::x_x_minus_1()).unwrap();
        prop_assert!(r.is_zero());
        prop_assert_eq!(q, h);
    }

    #[test]
    fn kpoly_serde_round_trip(h in k_poly()) {
        let text = serde_json::to_string(&h).unwrap();
        let back: KPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, h);
    }
}
