use std::fmt;
use std::str::FromStr;

use crate::bc::bivariate::BivariatePoly;
use crate::error::{Error, ParseError, Result};
use crate::exact::Rational;

/// Nonzero element `(unit_num / unit_den) · x^j · y^k` of `K = ℚ(x, y)`.
///
/// Neither `unit_num` nor `unit_den` is divisible by `x` or `y`, and
/// `unit_den` has leading coefficient 1.
#[derive(Clone)]
pub struct NormalForm2 {
    pub unit_num: BivariatePoly,
    pub unit_den: BivariatePoly,
    pub j: i64,
    pub k: i64,
}

/// Element of `K`; zero is kept apart because it has no valuation.
#[derive(Clone, Debug)]
pub enum KValue {
    Zero,
    Value(NormalForm2),
}

/// The adjoined fraction of an overring: `y/x²` for `D₁`, `x/y²` for `D₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overring {
    D1,
    D2,
}

impl Overring {
    pub fn generator(self) -> KValue {
        match self {
            Overring::D1 => KValue::monomial(-2, 1),
            Overring::D2 => KValue::monomial(1, -2),
        }
    }
}

/// `h = Σ coeffs[i] · t^{powers[i]}` with every coefficient in `D`.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub ring: Overring,
    pub terms: Vec<(u32, KValue)>,
}

impl Expansion {
    /// Re-multiplies the expansion in `K`.
    pub fn evaluate(&self) -> KValue {
        let t = self.ring.generator();
        self.terms.iter().fold(KValue::Zero, |acc, (i, d)| acc.add(&d.mul(&t.pow(*i as i64))))
    }

    pub fn coefficients_in_d(&self) -> bool {
        self.terms.iter().all(|(_, d)| in_d(d))
    }
}

/// Normal form of `num / den`.
pub fn normal_form(num: &BivariatePoly, den: &BivariatePoly) -> Result<KValue> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(KValue::Zero);
    }
    let (nx, ny) = (num.x_valuation(), num.y_valuation());
    let (dx, dy) = (den.x_valuation(), den.y_valuation());
    Ok(KValue::Value(reduce(
        num.shift_down(nx, ny),
        den.shift_down(dx, dy),
        nx as i64 - dx as i64,
        ny as i64 - dy as i64,
    )))
}

fn reduce(num: BivariatePoly, den: BivariatePoly, j: i64, k: i64) -> NormalForm2 {
    let (mut num, mut den) = (num, den);
    if !den.is_constant() {
        if let Some(q) = num.exact_div(&den) {
            num = q;
            den = BivariatePoly::one();
        } else if let Some(q) = den.exact_div(&num) {
            den = q;
            num = BivariatePoly::one();
        }
    }
    let lc = den.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::one);
    if lc != Rational::one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    NormalForm2 { unit_num: num, unit_den: den, j, k }
}

impl NormalForm2 {
    fn numerator_poly(&self) -> BivariatePoly {
        self.unit_num.shift_up(self.j.max(0) as u32, self.k.max(0) as u32)
    }

    fn denominator_poly(&self) -> BivariatePoly {
        self.unit_den.shift_up((-self.j).max(0) as u32, (-self.k).max(0) as u32)
    }
}

impl KValue {
    pub fn one() -> Self {
        KValue::monomial(0, 0)
    }

    pub fn constant(c: Rational) -> Self {
        KValue::from_poly(&BivariatePoly::constant(c))
    }

    pub fn monomial(j: i64, k: i64) -> Self {
        KValue::Value(NormalForm2 { unit_num: BivariatePoly::one(), unit_den: BivariatePoly::one(), j, k })
    }

    pub fn from_poly(p: &BivariatePoly) -> Self {
        normal_form(p, &BivariatePoly::one()).expect("nonzero denominator")
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, KValue::Zero)
    }

    pub fn valuations(&self) -> Option<(i64, i64)> {
        match self {
            KValue::Zero => None,
            KValue::Value(h) => Some((h.j, h.k)),
        }
    }

    /// Numerator and denominator as elements of `ℚ[x, y]`.
    pub fn as_fraction(&self) -> (BivariatePoly, BivariatePoly) {
        match self {
            KValue::Zero => (BivariatePoly::zero(), BivariatePoly::one()),
            KValue::Value(h) => (h.numerator_poly(), h.denominator_poly()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            KValue::Zero => KValue::Zero,
            KValue::Value(h) => KValue::Value(NormalForm2 { unit_num: h.unit_num.neg(), ..h.clone() }),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = match (self, other) {
            (KValue::Zero, _) => return other.clone(),
            (_, KValue::Zero) => return self.clone(),
            (KValue::Value(a), KValue::Value(b)) => (a, b),
        };
        let (j0, k0) = (a.j.min(b.j), a.k.min(b.k));
        let lift = |h: &NormalForm2, other_den: &BivariatePoly| {
            h.unit_num.mul(other_den).shift_up((h.j - j0) as u32, (h.k - k0) as u32)
        };
        let (num, den) = if a.unit_den == b.unit_den {
            let one = BivariatePoly::one();
            (lift(a, &one).add(&lift(b, &one)), a.unit_den.clone())
        } else {
            (lift(a, &b.unit_den).add(&lift(b, &a.unit_den)), a.unit_den.mul(&b.unit_den))
        };
        match normal_form(&num, &den).expect("nonzero denominator") {
            KValue::Zero => KValue::Zero,
            KValue::Value(h) => KValue::Value(NormalForm2 { j: h.j + j0, k: h.k + k0, ..h }),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (KValue::Value(a), KValue::Value(b)) => {
                let num = a.unit_num.mul(&b.unit_num);
                let den = if b.unit_den.is_one() {
                    a.unit_den.clone()
                } else if a.unit_den.is_one() {
                    b.unit_den.clone()
                } else {
                    a.unit_den.mul(&b.unit_den)
                };
                KValue::Value(reduce(num, den, a.j + b.j, a.k + b.k))
            }
            _ => KValue::Zero,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            KValue::Zero => Err(Error::ZeroDivisor),
            KValue::Value(h) => Ok(KValue::Value(reduce(h.unit_den.clone(), h.unit_num.clone(), -h.j, -h.k))),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv().expect("nonzero base") } else { self.clone() };
        (0..n.unsigned_abs()).fold(KValue::one(), |acc, _| acc.mul(&base))
    }

    /// Value at a rational point where the denominator does not vanish.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Option<Rational> {
        let (n, d) = self.as_fraction();
        let dv = d.eval(x, y);
        (!dv.is_zero()).then(|| n.eval(x, y) / dv)
    }
}

impl PartialEq for KValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (KValue::Zero, KValue::Zero) => true,
            (KValue::Value(a), KValue::Value(b)) => {
                a.j == b.j && a.k == b.k && a.unit_num.mul(&b.unit_den) == b.unit_num.mul(&a.unit_den)
            }
            _ => false,
        }
    }
}

impl Eq for KValue {}

impl fmt::Debug for NormalForm2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})·x^{}·y^{}", self.unit_num, self.unit_den, self.j, self.k)
    }
}

impl fmt::Display for KValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.as_fraction();
        if d.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({d})")
        }
    }
}

impl FromStr for KValue {
    type Err = ParseError;

    /// Accepts `"p"` or `"(p)/(q)"` with `p`, `q` bivariate polynomials.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => split = Some(i),
                _ => {}
            }
        }
        let strip = |t: &str| {
            let t = t.trim();
            t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t).to_string()
        };
        let (n, d) = match split {
            Some(i) => (strip(&s[..i]), strip(&s[i + 1..])),
            None => (s.to_string(), "1".to_string()),
        };
        let num: BivariatePoly = n.parse()?;
        let den: BivariatePoly = d.parse()?;
        normal_form(&num, &den).map_err(|_| ParseError::Poly(s.to_string()))
    }
}

/// Membership in `D = S⁻¹ℚ[x, y]`.
pub fn in_d(h: &KValue) -> bool {
    h.valuations().is_none_or(|(j, k)| j >= 0 && k >= 0)
}

/// Membership in `D₁ = D[y/x²]`: exactly the elements with `v_y ≥ 0`.
pub fn in_d1(h: &KValue) -> bool {
    h.valuations().is_none_or(|(_, k)| k >= 0)
}

/// Membership in `D₂ = D[x/y²]`: exactly the elements with `v_x ≥ 0`.
pub fn in_d2(h: &KValue) -> bool {
    h.valuations().is_none_or(|(j, _)| j >= 0)
}

pub fn in_overring(ring: Overring, h: &KValue) -> bool {
    match ring {
        Overring::D1 => in_d1(h),
        Overring::D2 => in_d2(h),
    }
}

fn binomial(n: u32, r: u32) -> i64 {
    (0..r).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Writes `h` as a polynomial in the adjoined fraction with coefficients in `D`.
pub fn expand(ring: Overring, h: &KValue) -> Option<Expansion> {
    if !in_overring(ring, h) {
        return None;
    }
    let (j, k) = match h.valuations() {
        None => return Some(Expansion { ring, terms: Vec::new() }),
        Some((j, k)) => match ring {
            Overring::D1 => (j, k),
            Overring::D2 => (k, j),
        },
    };
    // in the D₁ frame: t = y/x², h = u·x^j·y^k with k ≥ 0
    let mono = |a: i64, b: i64| match ring {
        Overring::D1 => KValue::monomial(a, b),
        Overring::D2 => KValue::monomial(b, a),
    };
    let unit = h.mul(&mono(-j, -k));
    if j >= 0 {
        return Some(Expansion { ring, terms: vec![(0, h.clone())] });
    }
    let i = k.min((-j + 1) / 2);
    let rest = j + 2 * i;
    if rest >= 0 {
        return Some(Expansion { ring, terms: vec![(i as u32, unit.mul(&mono(rest, k - i)))] });
    }
    // k = i: x^{-1} = 1/(x+y) + (x/(x+y))·t, raised to the m-th power
    let m = (-rest) as u32;
    let x_plus_y = BivariatePoly::x().add(&BivariatePoly::y());
    let e0 = normal_form(&BivariatePoly::one(), &x_plus_y).expect("nonzero");
    let x_frame = match ring {
        Overring::D1 => BivariatePoly::x(),
        Overring::D2 => BivariatePoly::y(),
    };
    let e1 = normal_form(&x_frame, &x_plus_y).expect("nonzero");
    let terms = (0..=m)
        .map(|r| {
            let c = KValue::constant(Rational::integer(binomial(m, r)));
            let d = unit.mul(&c).mul(&e0.pow((m - r) as i64)).mul(&e1.pow(r as i64));
            (k as u32 + r, d)
        })
        .collect();
    Some(Expansion { ring, terms })
}
