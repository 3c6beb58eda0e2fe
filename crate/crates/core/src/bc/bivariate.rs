use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::exact::Rational;

/// Sparse polynomial in `ℚ[x, y]`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        BivariatePoly::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        BivariatePoly::constant(Rational::one())
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivariatePoly { terms }
    }

    pub fn x() -> Self {
        BivariatePoly::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        BivariatePoly::monomial(0, 1, Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = BivariatePoly::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    fn add_term(&mut self, k: (u32, u32), c: &Rational) {
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| *c == Rational::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    /// Largest `a` with `x^a` dividing `self`.
    pub fn x_valuation(&self) -> u32 {
        self.terms.keys().map(|k| k.0).min().unwrap_or(0)
    }

    pub fn y_valuation(&self) -> u32 {
        self.terms.keys().map(|k| k.1).min().unwrap_or(0)
    }

    /// `self / (x^a y^b)`; the caller guarantees divisibility.
    pub fn shift_down(&self, a: u32, b: u32) -> Self {
        BivariatePoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i - a, j - b), c.clone())).collect() }
    }

    pub fn shift_up(&self, a: u32, b: u32) -> Self {
        BivariatePoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BivariatePoly::zero();
        }
        BivariatePoly { terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivariatePoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                out.add_term((i + k, j + l), &(a * b));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(BivariatePoly::one(), |acc, _| acc.mul(self))
    }

    /// Leading term in lexicographic order (`x` before `y`).
    pub fn leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let ((dx, dy), dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = BivariatePoly::zero();
        while let Some(((rx, ry), rc)) = rem.leading() {
            if rx < dx || ry < dy {
                return None;
            }
            let t = BivariatePoly::monomial(rx - dx, ry - dy, rc / dc);
            rem = rem.sub(&d.mul(&t));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Value at a point of `ℚ²`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().map(|(&(i, j), c)| c * &x.pow(i as i32) * y.pow(j as i32)).sum()
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        BivariatePoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }
}

fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !(c == &Rational::one() && (i, j) != (0, 0)) {
                parts.push(fmt_coeff(c));
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_monomial(t: &str) -> Result<BivariatePoly, ParseError> {
    let bad = || ParseError::Poly(t.to_string());
    let t = t.trim();
    let (sign, body) = match t.strip_prefix('-') {
        Some(r) => (-1, r.trim()),
        None => (1, t),
    };
    let mut coeff = Rational::integer(sign);
    let (mut i, mut j) = (0u32, 0u32);
    for factor in body.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(bad());
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        match base {
            "x" => i += exp,
            "y" => j += exp,
            _ => {
                let inner = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(base);
                let c: Rational = inner.parse()?;
                coeff = &coeff * &c.pow(exp as i32);
            }
        }
    }
    Ok(BivariatePoly::monomial(i, j, coeff))
}

impl FromStr for BivariatePoly {
    type Err = ParseError;

    /// Parses sums of monomials such as `"3*x^2*y + (1/2)*x - 1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::Poly(s.to_string()));
        }
        let mut out = BivariatePoly::zero();
        let mut cur = String::new();
        let mut depth = 0i32;
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with('^') {
                out = out.add(&parse_monomial(&cur)?);
                cur.clear();
            }
            if !(depth == 0 && ch == '+') {
                cur.push(ch);
            }
        }
        if !cur.trim().is_empty() {
            out = out.add(&parse_monomial(&cur)?);
        }
        Ok(out)
    }
}
