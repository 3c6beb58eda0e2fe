use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::value::{MonoidValue, ValueTag};
use crate::error::{Error, Result};
use crate::exact::{PrimeSeq, Rational};

fn odd_primes() -> PrimeSeq {
    PrimeSeq::OddPrimes
}

/// Which monoid a [`Presentation`] describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "kebab-case")]
pub enum Family {
    /// Finitely many positive rational generators.
    Explicit { gens: Vec<MonoidValue> },
    /// `⟨1/(2^n p_n)⟩`; odd primes by default.
    Grams {
        #[serde(default = "odd_primes")]
        primes: PrimeSeq,
    },
    /// `⟨1/(p^n p_n)⟩` with `(p_n)` the primes other than `p`, indexed from `n = 1`.
    Gp { p: u64 },
    /// `⟨q^n : n ≥ 0⟩` with `0 < q < 1` and `1/q` not an integer.
    CyclicSq { q: Rational },
    /// `⟨1/(p_n p_{n+2})⟩` over all primes.
    PairPrimes,
    /// The rank-two monoid generated by `A ∪ B` over the sparse primes.
    RankTwoP,
    /// `G_1 = ⟨1/(2^n p_n)⟩` or `G_2 = ⟨1/(2^n q_n)⟩` with interleaved odd primes `p_n < q_n < p_{n+1}`.
    IntersectG { side: u8 },
    /// Exponent monoid of the Zaks domain, vectors `(U, V, W, X_1, …, X_N)`.
    Zaks,
}

/// A monoid family together with a truncation depth `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    #[serde(flatten)]
    pub family: Family,
    pub depth: usize,
}

/// Data of a family of the shape `⟨1/(base^n p_n)⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdFamily {
    pub base: u64,
    pub primes: PrimeSeq,
}

impl GdFamily {
    /// The generator `1/(base^n p_n)`.
    pub fn generator(&self, n: usize) -> Rational {
        let den = BigInt::from(self.base).pow(n as u32) * BigInt::from(self.primes.nth(n));
        Rational::from_bigs(BigInt::one(), den)
    }
}

impl Presentation {
    pub fn new(family: Family, depth: usize) -> Result<Self> {
        let p = Presentation { family, depth };
        p.validate()?;
        Ok(p)
    }

    pub fn grams(depth: usize) -> Self {
        Presentation { family: Family::Grams { primes: PrimeSeq::OddPrimes }, depth }
    }

    pub fn gp(p: u64, depth: usize) -> Self {
        Presentation { family: Family::Gp { p }, depth }
    }

    pub fn cyclic_sq(q: Rational, depth: usize) -> Result<Self> {
        Presentation::new(Family::CyclicSq { q }, depth)
    }

    pub fn pair_primes(depth: usize) -> Self {
        Presentation { family: Family::PairPrimes, depth }
    }

    pub fn rank_two(depth: usize) -> Self {
        Presentation { family: Family::RankTwoP, depth }
    }

    pub fn intersect(side: u8, depth: usize) -> Self {
        Presentation { family: Family::IntersectG { side }, depth }
    }

    pub fn zaks(depth: usize) -> Self {
        Presentation { family: Family::Zaks, depth }
    }

    pub fn explicit(gens: Vec<Rational>) -> Result<Self> {
        let depth = gens.len();
        Presentation::new(
            Family::Explicit { gens: gens.into_iter().map(MonoidValue::Puiseux).collect() },
            depth,
        )
    }

    pub fn with_depth(&self, depth: usize) -> Self {
        Presentation { family: self.family.clone(), depth }
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Explicit { .. } => "explicit",
            Family::Grams { .. } => "grams",
            Family::Gp { .. } => "gp",
            Family::CyclicSq { .. } => "cyclic-sq",
            Family::PairPrimes => "pair-primes",
            Family::RankTwoP => "rank-two-p",
            Family::IntersectG { .. } => "intersect-g",
            Family::Zaks => "zaks",
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.depth == 0 {
            return Err(Error::InvalidPresentation("depth must be at least 1".into()));
        }
        match &self.family {
            Family::Explicit { gens } => {
                if gens.is_empty() {
                    return Err(Error::InvalidPresentation("no generators".into()));
                }
                for g in gens {
                    match g {
                        MonoidValue::Puiseux(q) if q.is_positive() => {}
                        _ => {
                            return Err(Error::InvalidPresentation(format!(
                                "generator {g} is not a positive rational"
                            )))
                        }
                    }
                }
                let mut sorted = gens.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != gens.len() {
                    return Err(Error::InvalidPresentation("duplicate generators".into()));
                }
                Ok(())
            }
            Family::Grams { primes } => {
                primes.validate()?;
                if primes.nth(1) == 2 {
                    return Err(Error::InvalidPresentation(
                        "the Grams family needs odd primes".into(),
                    ));
                }
                Ok(())
            }
            Family::Gp { p } => PrimeSeq::PrimesExcluding { p: *p }.validate(),
            Family::CyclicSq { q } => {
                if !(q.is_positive() && q < &Rational::one()) {
                    return Err(Error::InvalidPresentation("q must lie in (0, 1)".into()));
                }
                if q.numer() == &BigInt::one() {
                    return Err(Error::InvalidPresentation("1/q must not be an integer".into()));
                }
                Ok(())
            }
            Family::IntersectG { side } => PrimeSeq::Interleaved { side: *side }.validate(),
            Family::PairPrimes | Family::RankTwoP | Family::Zaks => Ok(()),
        }
    }

    pub fn value_tag(&self) -> ValueTag {
        match self.family {
            Family::RankTwoP => ValueTag::RankTwo,
            Family::Zaks => ValueTag::IntVec,
            _ => ValueTag::Puiseux,
        }
    }

    /// Identity element of the presented monoid.
    pub fn zero(&self) -> MonoidValue {
        match self.value_tag() {
            ValueTag::Puiseux => MonoidValue::Puiseux(Rational::zero()),
            ValueTag::RankTwo => MonoidValue::RankTwo { beta: 0, q: Rational::zero() },
            ValueTag::IntVec => MonoidValue::IntVec(vec![0; self.depth + 3]),
        }
    }

    pub fn check_tag(&self, v: &MonoidValue) -> Result<()> {
        if v.tag() != self.value_tag() {
            return Err(Error::TagMismatch);
        }
        if let (Family::Zaks, MonoidValue::IntVec(x)) = (&self.family, v) {
            if x.len() != self.depth + 3 {
                return Err(Error::LengthMismatch { expected: self.depth + 3, got: x.len() });
            }
        }
        Ok(())
    }

    /// `Some` for the families of shape `⟨1/(base^n p_n)⟩`.
    pub fn gd_family(&self) -> Option<GdFamily> {
        match &self.family {
            Family::Grams { primes } => Some(GdFamily { base: 2, primes: primes.clone() }),
            Family::Gp { p } => Some(GdFamily { base: *p, primes: PrimeSeq::PrimesExcluding { p: *p } }),
            Family::IntersectG { side } => {
                Some(GdFamily { base: 2, primes: PrimeSeq::Interleaved { side: *side } })
            }
            _ => None,
        }
    }

    /// The first `depth` generators in canonical index order.
    pub fn generators(&self) -> Vec<MonoidValue> {
        let n = self.depth;
        match &self.family {
            Family::Explicit { gens } => gens.iter().take(n).cloned().collect(),
            Family::Grams { .. } | Family::Gp { .. } | Family::IntersectG { .. } => {
                let fam = self.gd_family().expect("gd family");
                (1..=n).map(|i| MonoidValue::Puiseux(fam.generator(i))).collect()
            }
            Family::CyclicSq { q } => (0..=n as i32).map(|i| MonoidValue::Puiseux(q.pow(i))).collect(),
            Family::PairPrimes => (1..=n)
                .map(|i| {
                    let q = PrimeSeq::AllPrimes.nth(i) * PrimeSeq::AllPrimes.nth(i + 2);
                    MonoidValue::Puiseux(Rational::recip_of(q))
                })
                .collect(),
            Family::RankTwoP => super::rank_two::generators(n),
            Family::Zaks => super::zaks::generator_vectors(n).into_iter().map(MonoidValue::IntVec).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rationals(p: &Presentation) -> Vec<Rational> {
        p.generators().into_iter().map(|g| g.as_rational().unwrap().clone()).collect()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(
            rationals(&Presentation::grams(3)),
            vec![Rational::new(1, 6), Rational::new(1, 20), Rational::new(1, 56)]
        );
        assert_eq!(
            rationals(&Presentation::pair_primes(4)),
            vec![Rational::new(1, 10), Rational::new(1, 21), Rational::new(1, 55), Rational::new(1, 91)]
        );
        let s = Presentation::cyclic_sq(Rational::new(2, 3), 2).unwrap();
        assert_eq!(rationals(&s), vec![Rational::one(), Rational::new(2, 3), Rational::new(4, 9)]);
        assert_eq!(rationals(&Presentation::gp(2, 2)), vec![Rational::new(1, 6), Rational::new(1, 20)]);
        assert_eq!(rationals(&Presentation::gp(3, 2)), vec![Rational::new(1, 6), Rational::new(1, 45)]);
        assert_eq!(
            rationals(&Presentation::intersect(2, 2)),
            vec![Rational::new(1, 10), Rational::new(1, 44)]
        );
    }

    #[test]
    fn invalid_presentations_are_rejected() {
        assert!(Presentation::cyclic_sq(Rational::new(1, 3), 2).is_err());
        assert!(Presentation::cyclic_sq(Rational::new(3, 2), 2).is_err());
        assert!(Presentation::new(Family::Grams { primes: PrimeSeq::AllPrimes }, 3).is_err());
        assert!(Presentation::new(Family::PairPrimes, 0).is_err());
        assert!(Presentation::explicit(vec![Rational::new(1, 2), Rational::new(1, 2)]).is_err());
    }

    #[test]
    fn json_shape() {
        let p = Presentation::gp(3, 4);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"family":"gp","params":{"p":3},"depth":4}"#);
        let back: Presentation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let pp: Presentation = serde_json::from_str(r#"{"family":"pair-primes","depth":8}"#).unwrap();
        assert_eq!(pp, Presentation::pair_primes(8));
        let g: Presentation = serde_json::from_str(r#"{"family":"grams","params":{},"depth":3}"#).unwrap();
        assert_eq!(g, Presentation::grams(3));
        let e: Presentation =
            serde_json::from_str(r#"{"family":"explicit","params":{"gens":["2/3","1"]},"depth":2}"#).unwrap();
        assert_eq!(e.generators().len(), 2);
    }
}
