//! The `verify-paper` suite: every anchored expectation, re-derived from the library.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{
    antimatter_split, common_divisor_units_only, divides_in_algebra, localization_chain_check, rank2_embed,
    zaks_algebra_map, ChainRing, CommonDivisors, Division, ExponentMonoid, FieldSpec, LocalizedElement, PolyExpr,
};
use crate::bc::{accp_element_bc, in_d, in_d1, KPoly, KValue};
use crate::chain::{
    accp_element, classify, effective_depth, gcd_is_zero, strong_common_divisor, validate_chain, weak_accp_witness,
    ChainCertificate, ChainRule, Classification, NotFoundEvidence, WeakAccpWitness,
};
use crate::decompose::in_a_span_sufficient;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::monoid::rank_two::beta;
use crate::monoid::{Budget, Kernel, MonoidValue, Presentation};
use crate::zaks::{zaks_factorizations, zaks_member, zaks_relation_check, ZaksPresentation};

pub const DEFAULT_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

/// How a scenario uses the truncation depth.
#[derive(Clone, Copy, Debug)]
enum DepthUse {
    /// Runs at exactly this depth, provided the requested depth reaches it.
    Fixed(usize),
    /// Runs at the requested depth once it reaches this bound.
    AtLeast(usize),
    Independent,
}

struct Scenario {
    name: &'static str,
    anchor: &'static str,
    expected: &'static str,
    depth: DepthUse,
    run: fn(usize, u64) -> Result<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioResult {
    pub scenario: String,
    pub anchor_quote: String,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
    pub depth: usize,
    pub budget: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperReport {
    pub depth: usize,
    pub budget: u64,
    pub summary: Summary,
    pub results: Vec<ScenarioResult>,
}

impl PaperReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.unknown == 0
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(out, "# verify-paper (depth {}, budget {})\n", self.depth, self.budget);
        let _ = writeln!(out, "pass: {}, fail: {}, unknown: {}\n", s.pass, s.fail, s.unknown);
        let _ = writeln!(out, "| scenario | verdict | expected | actual | anchor |");
        let _ = writeln!(out, "|---|---|---|---|---|");
        for r in &self.results {
            let verdict = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Unknown => "unknown",
            };
            let cell = |t: &str| t.replace('|', "\\|");
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                r.scenario,
                verdict,
                cell(&r.expected),
                cell(&r.actual),
                cell(&r.anchor_quote)
            );
        }
        out
    }
}

fn q(n: i64, d: i64) -> MonoidValue {
    MonoidValue::q(n, d)
}

fn yes_no(b: bool) -> String {
    b.to_string()
}

fn sorted_list(vals: impl IntoIterator<Item = MonoidValue>) -> String {
    let set: BTreeSet<MonoidValue> = vals.into_iter().collect();
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn flags_text(c: &Classification, count: usize) -> String {
    let named = [
        ("accp", c.accp.value),
        ("weak_accp", c.weak_accp.value),
        ("strongly_atomic", c.strongly_atomic.value),
        ("atomic", c.atomic.value),
    ];
    named.iter().take(count).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(", ")
}

fn fails_with_valid_chain(pres: &Presentation, b: &MonoidValue, budget: u64) -> Result<String> {
    let v = accp_element(pres, b, budget)?;
    Ok(match v.certificate() {
        Some(cert) if v.fails() => {
            if validate_chain(&pres.with_depth(effective_depth(pres, b)), cert) {
                "fails, chain validated".to_string()
            } else {
                "fails, chain rejected".to_string()
            }
        }
        _ => v.to_string(),
    })
}

fn rule_chain(pres: &Presentation, start: MonoidValue, rule: ChainRule, extra: usize) -> Result<String> {
    let cert = ChainCertificate::from_rule(start, rule, extra)?;
    Ok(if validate_chain(pres, &cert) { "strict chain".to_string() } else { "not strict".to_string() })
}

fn x_pow(num: i64, den: i64) -> PolyExpr {
    PolyExpr::x_pow(FieldSpec::Rationals, Rational::new(num, den))
}

fn x_pow_minus_one(num: i64, den: i64) -> Result<PolyExpr> {
    x_pow(num, den).sub(&PolyExpr::one(FieldSpec::Rationals))
}

fn scenarios() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "accp/grams-one-half",
            anchor: "(1/p^n + G_p)_{n ≥ 1} does not stabilize",
            expected: "fails, chain validated",
            depth: DepthUse::AtLeast(3),
            run: |d, b| fails_with_valid_chain(&Presentation::grams(d), &q(1, 2), b),
        },
        Scenario {
            name: "accp/pair-primes-one-half",
            anchor: "ascending chains of principal ideals of M starting at 1/2 + M and 1/3 + M, respectively, do not stabilize",
            expected: "fails, chain validated",
            depth: DepthUse::AtLeast(4),
            run: |d, b| fails_with_valid_chain(&Presentation::pair_primes(d), &q(1, 2), b),
        },
        Scenario {
            name: "accp/pair-primes-one-third",
            anchor: "ascending chains of principal ideals of M starting at 1/2 + M and 1/3 + M, respectively, do not stabilize",
            expected: "fails, chain validated",
            depth: DepthUse::AtLeast(4),
            run: |d, b| fails_with_valid_chain(&Presentation::pair_primes(d), &q(1, 3), b),
        },
        Scenario {
            name: "algebra/cube-root-identity",
            anchor: "X^{1/3^n} − 1 = (X^{1/3^{n+1}} − 1)(X^{2/3^{n+1}} + X^{1/3^{n+1}} + 1)",
            expected: "holds for n = 0, 1, 2",
            depth: DepthUse::Independent,
            run: |_, _| {
                let mut ok = Vec::new();
                for n in 0..=2u32 {
                    let d = 3i64.pow(n);
                    let lhs = x_pow_minus_one(1, d)?;
                    let a = x_pow_minus_one(1, 3 * d)?;
                    let b = x_pow(2, 3 * d).add(&x_pow(1, 3 * d))?.add(&PolyExpr::one(FieldSpec::Rationals))?;
                    if a.mul(&b)? == lhs {
                        ok.push(n.to_string());
                    }
                }
                Ok(format!("holds for n = {}", ok.join(", ")))
            },
        },
        Scenario {
            name: "algebra/cube-root-divides",
            anchor: "X^{1/3^n} − 1 = (X^{1/3^{n+1}} − 1)(X^{2/3^{n+1}} + X^{1/3^{n+1}} + 1)",
            expected: "yes",
            depth: DepthUse::Independent,
            run: |_, b| {
                let f = x_pow_minus_one(1, 3)?;
                let g = x_pow_minus_one(1, 1)?;
                Ok(match divides_in_algebra(&f, &g, &ExponentMonoid::NonnegRationals, b)? {
                    Division::Yes { quotient } if f.mul(&quotient)? == g => "yes".into(),
                    other => format!("{other:?}"),
                })
            },
        },
        Scenario {
            name: "algebra/difference-trick",
            anchor: "f(X) ∣_{F[M]} (X+1) − (X−1) = 2, and so f ∈ F[M]^×",
            expected: "units only, constant 2/1",
            depth: DepthUse::Independent,
            run: |_, b| {
                let f: PolyExpr = "X - 1".parse()?;
                let g: PolyExpr = "X + 1".parse()?;
                Ok(match common_divisor_units_only(&f, &g, &ExponentMonoid::Naturals, b)? {
                    CommonDivisors::UnitsOnly { constant } => format!("units only, constant {constant}"),
                    other => format!("{other:?}"),
                })
            },
        },
        Scenario {
            name: "antimatter/split-one-half",
            anchor: "the decomposition h(X) = X^{q/2}(X^{q/2}u(X)) shows that h is not irreducible",
            expected: "(1/4, 1/4)",
            depth: DepthUse::Independent,
            run: |_, _| {
                let (l, r) = antimatter_split(&Rational::new(1, 2))?;
                Ok(format!("({l}, {r})"))
            },
        },
        Scenario {
            name: "atoms/cyclic-sq",
            anchor: "The monoid S_q is atomic",
            expected: "16/81, 8/27, 4/9, 2/3, 1/1",
            depth: DepthUse::Fixed(4),
            run: |d, b| {
                let pres = Presentation::cyclic_sq(Rational::new(2, 3), d)?;
                Ok(sorted_list(Kernel::new(&pres)?.with_budget(b).atoms()?))
            },
        },
        Scenario {
            name: "atoms/pair-primes",
            anchor: "the set of atoms 𝒜(M) = {1/q_n ∣ n ∈ ℕ}",
            expected: "1/187, 1/91, 1/55, 1/21, 1/10",
            depth: DepthUse::Fixed(5),
            run: |d, b| Ok(sorted_list(Kernel::new(&Presentation::pair_primes(d))?.with_budget(b).atoms()?)),
        },
        Scenario {
            name: "atoms/rank-two",
            anchor: "𝒜(M) = A ∪ B",
            expected: "A ∪ B restricted to indices ≤ 3",
            depth: DepthUse::Fixed(3),
            run: |d, b| {
                let got: BTreeSet<MonoidValue> =
                    Kernel::new(&Presentation::rank_two(d))?.with_budget(b).atoms()?.into_iter().collect();
                let primes = [5i64, 17, 67];
                let mut want = BTreeSet::new();
                for v in 0..27usize {
                    let digits = [v % 3, v / 3 % 3, v / 9];
                    if digits.iter().filter(|&&x| x == 2).count() == 1 {
                        let s: Rational = digits.iter().zip(primes).map(|(&n, p)| Rational::new(n as i64, p)).sum();
                        want.insert(MonoidValue::RankTwo { beta: 0, q: s });
                    }
                }
                let mut offset = Rational::zero();
                want.insert(MonoidValue::RankTwo { beta: 1, q: Rational::zero() });
                for p in primes {
                    offset += &Rational::new(1, p);
                    want.insert(MonoidValue::RankTwo { beta: 1, q: -offset.clone() });
                }
                Ok(if got == want {
                    "A ∪ B restricted to indices ≤ 3".to_string()
                } else {
                    format!("mismatch: {}", sorted_list(got))
                })
            },
        },
        Scenario {
            name: "bc/accp-x",
            anchor: "(a) f does not satisfy ACCP. (b) f(0) = f(1) = 0.",
            expected: "true",
            depth: DepthUse::Independent,
            run: |_, _| Ok(yes_no(accp_element_bc(&KPoly::var())?)),
        },
        Scenario {
            name: "bc/accp-x-times-x-minus-one",
            anchor: "(a) f does not satisfy ACCP. (b) f(0) = f(1) = 0.",
            expected: "false",
            depth: DepthUse::Independent,
            run: |_, _| Ok(yes_no(accp_element_bc(&KPoly::x_x_minus_1())?)),
        },
        Scenario {
            name: "bc/d1-generator",
            anchor: "D₁ := D[y/x²]",
            expected: "true",
            depth: DepthUse::Independent,
            run: |_, _| Ok(yes_no(in_d1(&"(y)/(x^2)".parse::<KValue>()?))),
        },
        Scenario {
            name: "bc/unit-x-plus-y",
            anchor: "D^× = {s₁/s₂ ∣ s₁, s₂ ∈ S}",
            expected: "j=0, k=0, unit of D",
            depth: DepthUse::Independent,
            run: |_, _| {
                let h: KValue = "x + y".parse()?;
                let (j, k) = h.valuations().ok_or(Error::ZeroElement)?;
                let unit = in_d(&h) && in_d(&h.inv()?);
                Ok(format!("j={j}, k={k}, {}", if unit { "unit of D" } else { "not a unit of D" }))
            },
        },
        Scenario {
            name: "chain/gp-halving",
            anchor: "(1/p^n + G_p)_{n ≥ 1} does not stabilize",
            expected: "strict chain",
            depth: DepthUse::AtLeast(3),
            run: |d, _| {
                let rule = ChainRule::GramsHalving { fixed: Rational::zero(), moving: Rational::one(), base: 2, k: 1 };
                rule_chain(&Presentation::gp(2, d), q(1, 2), rule, 5)
            },
        },
        Scenario {
            name: "chain/pair-primes-one-half",
            anchor: "ascending chains of principal ideals of M starting at 1/2 + M and 1/3 + M, respectively, do not stabilize",
            expected: "strict chain",
            depth: DepthUse::AtLeast(8),
            run: |d, _| {
                let rule = ChainRule::PairprimesShift { fixed: Rational::zero(), index: 1 };
                rule_chain(&Presentation::pair_primes(d), q(1, 2), rule, 3)
            },
        },
        Scenario {
            name: "chain/pair-primes-one-third",
            anchor: "ascending chains of principal ideals of M starting at 1/2 + M and 1/3 + M, respectively, do not stabilize",
            expected: "strict chain",
            depth: DepthUse::AtLeast(8),
            run: |d, _| {
                let rule = ChainRule::PairprimesShift { fixed: Rational::zero(), index: 2 };
                rule_chain(&Presentation::pair_primes(d), q(1, 3), rule, 3)
            },
        },
        Scenario {
            name: "classify/cyclic-sq",
            anchor: "weak-ACCP domain that does not satisfy ACCP",
            expected: "accp=false, weak_accp=true",
            depth: DepthUse::AtLeast(4),
            run: |d, b| Ok(flags_text(&classify(&Presentation::cyclic_sq(Rational::new(2, 3), d)?, b)?, 2)),
        },
        Scenario {
            name: "classify/gp",
            anchor: "G_p is a weak-ACCP monoid. However, it does not satisfy ACCP",
            expected: "accp=false, weak_accp=true, strongly_atomic=true, atomic=true",
            depth: DepthUse::AtLeast(3),
            run: |d, b| Ok(flags_text(&classify(&Presentation::gp(2, d), b)?, 4)),
        },
        Scenario {
            name: "classify/grams",
            anchor: "G_p is a weak-ACCP monoid. However, it does not satisfy ACCP",
            expected: "accp=false, weak_accp=true, strongly_atomic=true, atomic=true",
            depth: DepthUse::AtLeast(3),
            run: |d, b| Ok(flags_text(&classify(&Presentation::grams(d), b)?, 4)),
        },
        Scenario {
            name: "classify/pair-primes",
            anchor: "M is an atomic monoid that is not weak-ACCP; M is strongly atomic",
            expected: "accp=false, weak_accp=false, strongly_atomic=true, atomic=true",
            depth: DepthUse::AtLeast(8),
            run: |d, b| Ok(flags_text(&classify(&Presentation::pair_primes(d), b)?, 4)),
        },
        Scenario {
            name: "common-divisors/pair-primes",
            anchor: "the only common divisor of 1/2 and 1/3 in M is 0",
            expected: "0/1",
            depth: DepthUse::AtLeast(8),
            run: |d, b| {
                let k = Kernel::new(&Presentation::pair_primes(d))?.with_budget(b);
                Ok(sorted_list(k.common_divisors(&[q(1, 2), q(1, 3)])?))
            },
        },
        Scenario {
            name: "divides/pair-primes-one-fifth",
            anchor: "1/p_n = 1/p_{n+2} + (p_{n+2} − p_n) 1/(p_n p_{n+2})",
            expected: "true",
            depth: DepthUse::AtLeast(1),
            run: |d, b| Ok(yes_no(Kernel::new(&Presentation::pair_primes(d))?.with_budget(b).divides(&q(1, 5), &q(1, 2))?)),
        },
        Scenario {
            name: "gcd-is-zero/pair-primes",
            anchor: "the only common divisor of 1/2 and 1/3 in M is 0",
            expected: "true",
            depth: DepthUse::AtLeast(8),
            run: |d, _| Ok(yes_no(gcd_is_zero(&Presentation::pair_primes(d), &q(1, 2), &q(1, 3))?)),
        },
        Scenario {
            name: "localization/cube-root-chain",
            anchor: "X^{1/3^n} − 1 = (X^{1/3^{n+1}} − 1)(X^{2/3^{n+1}} + X^{1/3^{n+1}} + 1)",
            expected: "strict chain",
            depth: DepthUse::Independent,
            run: |_, b| {
                let chain = (0..=4u32)
                    .map(|n| Ok(LocalizedElement::from_poly(x_pow_minus_one(1, 3i64.pow(n))?)))
                    .collect::<Result<Vec<_>>>()?;
                let ok = localization_chain_check(&chain, &ExponentMonoid::NonnegRationals, ChainRing::Plain, b)?;
                Ok(if ok { "strict chain" } else { "not strict" }.to_string())
            },
        },
        Scenario {
            name: "localization/gp-chain",
            anchor: "the ascending chain of principal ideals (F[G_p]_S X^{1/p^n})_{n∈ℕ} does not stabilize",
            expected: "strict chain",
            depth: DepthUse::AtLeast(6),
            run: |d, b| {
                let k = Kernel::new(&Presentation::gp(2, d))?.with_budget(b);
                let chain: Vec<_> = (1..=6).map(|n| LocalizedElement::from_poly(x_pow(1, 1 << n))).collect();
                let ok = localization_chain_check(&chain, &ExponentMonoid::Presented(&k), ChainRing::Localized, b)?;
                Ok(if ok { "strict chain" } else { "not strict" }.to_string())
            },
        },
        Scenario {
            name: "member/pair-primes-one-half",
            anchor: "{1/2, 1/3} is a subset of M",
            expected: "true",
            depth: DepthUse::AtLeast(1),
            run: |d, b| Ok(yes_no(Kernel::new(&Presentation::pair_primes(d))?.with_budget(b).member(&q(1, 2))?)),
        },
        Scenario {
            name: "rank-two/a-span-sufficient",
            anchor: "If min{n_j, n_k} ≥ 2 for some j,k, then q ∈ ⟨A⟩",
            expected: "true, witness reconstructs 2/5 + 2/17",
            depth: DepthUse::Independent,
            run: |_, _| {
                let check = in_a_span_sufficient(&BTreeMap::from([(1, 2), (2, 2)]));
                let target = Rational::new(2, 5) + Rational::new(2, 17);
                let ok = check.witness.as_ref().is_some_and(|w| w.iter().map(|a| a.value()).sum::<Rational>() == target);
                Ok(format!("{}, witness {} 2/5 + 2/17", check.holds, if ok { "reconstructs" } else { "misses" }))
            },
        },
        Scenario {
            name: "rank-two/embed-beta-one",
            anchor: "R := F[X;ℚ]; Y^{n₀β + q} ↦ X^q x^{n₀}",
            expected: "X^{-1/5}·x^1",
            depth: DepthUse::Independent,
            run: |_, _| {
                let f = PolyExpr::monomial(FieldSpec::Rationals, beta(1), Rational::one())?;
                let e = rank2_embed(&f)?;
                let parts: Vec<String> = e
                    .coeffs
                    .iter()
                    .flat_map(|(xd, inner)| inner.keys().map(move |qq| format!("X^{{{qq}}}·x^{xd}")))
                    .collect();
                Ok(parts.join(" + "))
            },
        },
        Scenario {
            name: "strong-divisor/pair-primes",
            anchor: "the only common divisor of 1/2 and 1/3 in M is 0",
            expected: "0/1",
            depth: DepthUse::AtLeast(8),
            run: |d, b| Ok(strong_common_divisor(&Presentation::pair_primes(d), &q(1, 2), &q(1, 3), b)?.to_string()),
        },
        Scenario {
            name: "weak-accp/pair-primes",
            anchor: "M is an atomic monoid that is not weak-ACCP",
            expected: "not found, exhaustive refutation",
            depth: DepthUse::AtLeast(8),
            run: |d, b| {
                Ok(match weak_accp_witness(&Presentation::pair_primes(d), &[q(1, 2), q(1, 3)], b)? {
                    WeakAccpWitness::NotFound { evidence: NotFoundEvidence::ExhaustiveRefutation { .. } } => {
                        "not found, exhaustive refutation".to_string()
                    }
                    other => format!("{other:?}"),
                })
            },
        },
        Scenario {
            name: "zaks/algebra-map-y2",
            anchor: "Y_n := UV/(W^n X_n)",
            expected: "U V W^-2 X_2^-1",
            depth: DepthUse::Fixed(2),
            run: |d, _| Ok(zaks_algebra_map(ZaksPresentation::new(d).y_n(2)?)?.to_string()),
        },
        Scenario {
            name: "zaks/relation-first",
            anchor: "Y_n := UV/(W^n X_n)",
            expected: "true",
            depth: DepthUse::AtLeast(1),
            run: |d, _| Ok(yes_no(zaks_relation_check(d, 1)?)),
        },
        Scenario {
            name: "zaks/relation-last",
            anchor: "Y_n := UV/(W^n X_n)",
            expected: "true",
            depth: DepthUse::AtLeast(1),
            run: |d, _| Ok(yes_no(zaks_relation_check(d, d)?)),
        },
        Scenario {
            name: "zaks/u-plus-v-expressions",
            anchor: "Y_n := UV/(W^n X_n)",
            expected: "member via {u, v} and via {n·w, x_n, y_n} for every n",
            depth: DepthUse::AtLeast(1),
            run: |d, b| {
                let pres = ZaksPresentation::new(d);
                let target: Vec<i64> = pres.u.iter().zip(&pres.v).map(|(a, c)| a + c).collect();
                if !zaks_member(&pres, &target)? {
                    return Ok("not a member".into());
                }
                let fs = zaks_factorizations(&pres, &target, &mut Budget::new(b))?;
                let plain = fs.iter().any(|f| f.u == 1 && f.v == 1 && f.w == 0);
                let relations = (1..=d).all(|n| {
                    fs.iter().any(|f| {
                        f.u == 0 && f.w == n as u64 && f.x[n - 1] == 1 && f.y[n - 1] == 1 && f.flat().iter().sum::<u64>() == n as u64 + 2
                    })
                });
                Ok(if plain && relations {
                    "member via {u, v} and via {n·w, x_n, y_n} for every n".to_string()
                } else {
                    format!("expressions found: {}", fs.len())
                })
            },
        },
    ]
}

/// Names of all scenarios, in report order.
pub fn scenario_names() -> Vec<&'static str> {
    let mut names: Vec<_> = scenarios().iter().map(|s| s.name).collect();
    names.sort_unstable();
    names
}

/// Runs the suite. `corrupt` replaces the expectation of one scenario, for harness self-tests.
pub fn verify_paper(depth: usize, budget: u64, corrupt: Option<&str>) -> PaperReport {
    let mut all = scenarios();
    all.sort_by_key(|s| s.name);
    let mut summary = Summary::default();
    let results: Vec<ScenarioResult> = all
        .iter()
        .map(|s| {
            let expected = if corrupt == Some(s.name) { format!("corrupted: {}", s.expected) } else { s.expected.to_string() };
            let run_depth = match s.depth {
                DepthUse::Fixed(n) if depth >= n => Some(n),
                DepthUse::AtLeast(n) if depth >= n => Some(depth),
                DepthUse::Independent => Some(0),
                _ => None,
            };
            let (actual, verdict) = match run_depth {
                None => ("depth insufficient".to_string(), Verdict::Unknown),
                Some(d) => match (s.run)(d, budget) {
                    Ok(a) if a == expected => (a, Verdict::Pass),
                    Ok(a) => (a, Verdict::Fail),
                    Err(Error::BudgetExhausted(n)) => (format!("budget of {n} steps exhausted"), Verdict::Unknown),
                    Err(e) => (format!("error: {e}"), Verdict::Fail),
                },
            };
            match verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Unknown => summary.unknown += 1,
            }
            ScenarioResult {
                scenario: s.name.to_string(),
                anchor_quote: s.anchor.to_string(),
                expected,
                actual,
                verdict,
                depth: run_depth.unwrap_or(depth),
                budget,
            }
        })
        .collect();
    PaperReport { depth, budget, summary, results }
}
