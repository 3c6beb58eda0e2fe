use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::FieldSpec;
use crate::error::{Error, ParseError, Result};
use crate::exact::Rational;
use crate::monoid::{MonoidValue, ValueTag};

/// A finite sum `Σ c_α X^α` with exponents in a monoid and coefficients in a field.
///
/// Zero coefficients are never stored, so the key set is the support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyExpr {
    field: FieldSpec,
    terms: BTreeMap<MonoidValue, Rational>,
}

fn zero_exponent(tag: ValueTag, like: Option<&MonoidValue>) -> MonoidValue {
    match (tag, like) {
        (_, Some(v)) => v.zero_like(),
        (ValueTag::Puiseux, None) => MonoidValue::Puiseux(Rational::zero()),
        (ValueTag::RankTwo, None) => MonoidValue::RankTwo { beta: 0, q: Rational::zero() },
        (ValueTag::IntVec, None) => MonoidValue::IntVec(Vec::new()),
    }
}

impl PolyExpr {
    pub fn zero(field: FieldSpec) -> Self {
        PolyExpr { field, terms: BTreeMap::new() }
    }

    /// `c X^0` over Puiseux exponents.
    pub fn constant(field: FieldSpec, c: Rational) -> Result<Self> {
        PolyExpr::monomial(field, MonoidValue::Puiseux(Rational::zero()), c)
    }

    pub fn one(field: FieldSpec) -> Self {
        PolyExpr::constant(field, Rational::one()).expect("1 is in every field")
    }

    pub fn monomial(field: FieldSpec, exp: MonoidValue, c: Rational) -> Result<Self> {
        PolyExpr::from_terms(field, [(exp, c)])
    }

    /// `X^q` over Puiseux exponents.
    pub fn x_pow(field: FieldSpec, q: Rational) -> Self {
        PolyExpr::monomial(field, MonoidValue::Puiseux(q), Rational::one()).expect("unit coefficient")
    }

    /// Sums the given terms, normalizing coefficients and dropping zeros.
    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (MonoidValue, Rational)>) -> Result<Self> {
        let mut out = PolyExpr::zero(field);
        let mut tag = None;
        for (e, c) in terms {
            match tag {
                None => tag = Some(e.tag()),
                Some(t) if t != e.tag() => return Err(Error::TagMismatch),
                _ => {}
            }
            let c = field.normalize(&c)?;
            out.add_term(e, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: MonoidValue, c: &Rational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry = self.field.add(entry, c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<MonoidValue, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &MonoidValue> + '_ {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn tag(&self) -> Option<ValueTag> {
        self.terms.keys().next().map(MonoidValue::tag)
    }

    pub fn deg(&self) -> Option<&MonoidValue> {
        self.terms.keys().next_back()
    }

    pub fn ord(&self) -> Option<&MonoidValue> {
        self.terms.keys().next()
    }

    pub fn leading(&self) -> Option<(&MonoidValue, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, e: &MonoidValue) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// `f(0)`: the coefficient of the zero exponent.
    pub fn constant_term(&self) -> Rational {
        match self.ord() {
            Some(e) if e.is_zero() => self.terms[e].clone(),
            _ => Rational::zero(),
        }
    }

    /// Units of `F[M]` for a reduced monoid `M` are the nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.ord().is_some_and(MonoidValue::is_zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        match (self.tag(), other.tag()) {
            (Some(a), Some(b)) if a != b => Err(Error::TagMismatch),
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let zero = Rational::zero();
        PolyExpr {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), self.field.sub(&zero, c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Result<Self> {
        let c = self.field.normalize(c)?;
        if c.is_zero() {
            return Ok(PolyExpr::zero(self.field));
        }
        Ok(PolyExpr {
            field: self.field,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), self.field.mul(a, &c))).collect(),
        })
    }

    /// Multiplication by `c X^e`.
    pub fn mul_term(&self, e: &MonoidValue, c: &Rational) -> Result<Self> {
        let mut out = PolyExpr::zero(self.field);
        for (a, x) in &self.terms {
            out.add_term(a.add(e)?, &self.field.mul(x, c));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = PolyExpr::zero(self.field);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b)?, &self.field.mul(x, y));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = match self.ord() {
            Some(e) => PolyExpr::monomial(self.field, zero_exponent(e.tag(), Some(e)), Rational::one())?,
            None => PolyExpr::one(self.field),
        };
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

fn format_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.field)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{}", format_coeff(c))?;
            } else {
                write!(f, "{}*X^{{{e}}}", format_coeff(c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits on top-level `+` and `-` signs, keeping the sign with its term.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with('*') {
            out.push(std::mem::take(&mut cur));
        }
        if !(depth == 0 && ch == '+') {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

fn parse_coeff(s: &str) -> std::result::Result<Rational, ParseError> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
    let c = if body.is_empty() { Rational::one() } else { body.parse()? };
    Ok(if neg { -c } else { c })
}

fn parse_term(t: &str) -> std::result::Result<(MonoidValue, Rational), ParseError> {
    let t = t.trim();
    let bad = || ParseError::Poly(t.to_string());
    let Some(xpos) = t.find('X') else {
        return Ok((MonoidValue::Puiseux(Rational::zero()), parse_coeff(t)?));
    };
    let coeff = t[..xpos].trim().trim_end_matches('*');
    let c = parse_coeff(coeff)?;
    let rest = t[xpos + 1..].trim();
    let exp = if rest.is_empty() {
        MonoidValue::Puiseux(Rational::one())
    } else {
        let inner = rest.strip_prefix('^').ok_or_else(bad)?.trim();
        let inner = inner.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(inner);
        inner.parse()?
    };
    Ok((exp, c))
}

impl FromStr for PolyExpr {
    type Err = ParseError;

    /// Parses `"QQ: 3*X^{1/2} + (1/4)*X^{1/3} - 1"`; the field prefix defaults to `QQ`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (field, body) = match s.split_once(':') {
            Some((f, b)) => (f.parse()?, b),
            None => (FieldSpec::Rationals, s),
        };
        let body = body.trim();
        if body == "0" || body.is_empty() {
            return Ok(PolyExpr::zero(field));
        }
        let terms = split_terms(body).iter().map(|t| parse_term(t)).collect::<std::result::Result<Vec<_>, _>>()?;
        PolyExpr::from_terms(field, terms).map_err(|e| ParseError::Poly(e.to_string()))
    }
}

impl Serialize for PolyExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PolyExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PolyExpr {
        s.parse().unwrap()
    }

    #[test]
    fn cube_root_identity() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
            for n in 0..=5 {
                let step = Rational::new(1, 3i64.pow(n + 1));
                let x = |k: i64| PolyExpr::x_pow(field, step.scale(k));
                let one = PolyExpr::one(field);
                let lhs = x(1).sub(&one).unwrap().mul(&x(2).add(&x(1)).unwrap().add(&one).unwrap()).unwrap();
                assert_eq!(lhs, x(3).sub(&one).unwrap());
            }
        }
    }

    #[test]
    fn basic_ops() {
        let f = p("QQ: X^{1/2} + 3");
        assert_eq!(f.mul(&PolyExpr::one(FieldSpec::Rationals)).unwrap(), f);
        let h = p("GF(2): X^{1/2}");
        assert_eq!(h.mul(&h).unwrap(), p("GF(2): X^{1}"));
        assert!(p("QQ: 5").is_unit());
        assert!(!p("QQ: X^{1/6}").is_unit());
        assert!(!p("QQ: X + 1").is_unit());
        assert!(p("QQ: 5").mul(&h).is_err());
        assert_eq!(p("QQ: X - X"), PolyExpr::zero(FieldSpec::Rationals));
        assert_eq!(p("GF(3): 2*X + X"), PolyExpr::zero(FieldSpec::Prime(3)));
    }

    #[test]
    fn text_round_trip() {
        for s in ["QQ: 3*X^{1/2} + (1/4)*X^{1/3} + -1", "GF(5): 4*X^{2/1} + 1", "QQ: 0", "QQ: 1*X^{2*b+1/5}"] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f, "{s}");
        }
        assert_eq!(p("X^{1/2} - 1").constant_term(), Rational::integer(-1));
        assert_eq!(p("QQ: 2*X^{1/3} - (1/2)*X").deg(), Some(&MonoidValue::q(1, 1)));
    }

    fn arb_poly(field: FieldSpec) -> impl Strategy<Value = PolyExpr> {
        prop::collection::vec((0i64..12, 1i64..4, -6i64..6), 0..5).prop_map(move |ts| {
            PolyExpr::from_terms(field, ts.into_iter().map(|(n, d, c)| (MonoidValue::q(n, d), Rational::integer(c))))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(f in arb_poly(FieldSpec::Rationals), g in arb_poly(FieldSpec::Rationals), h in arb_poly(FieldSpec::Rationals)) {
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
        }

        #[test]
        fn degree_additivity(f in arb_poly(FieldSpec::Prime(5)), g in arb_poly(FieldSpec::Prime(5))) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = f.mul(&g).unwrap();
            prop_assert_eq!(fg.deg().unwrap(), &f.deg().unwrap().add(g.deg().unwrap()).unwrap());
            prop_assert_eq!(fg.ord().unwrap(), &f.ord().unwrap().add(g.ord().unwrap()).unwrap());
        }
    }
}
