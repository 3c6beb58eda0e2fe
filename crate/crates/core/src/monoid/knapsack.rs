//! Unbounded integer knapsack over positive weights: decide `target = Σ c_i w_i`
//! with `c_i ≥ 0`, and enumerate all coefficient vectors.

use std::collections::HashSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Node-expansion counter shared by every search in the crate.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

fn mod_inverse_u128(a: u128, m: u128) -> Option<u128> {
    if m == 1 {
        return Some(0);
    }
    if m > i128::MAX as u128 {
        return None;
    }
    let (mut old_r, mut r) = ((a % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s.checked_sub(q.checked_mul(s)?)?);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u128)
}

/// Weights are searched in descending order; `suffix_gcd[i]` is the gcd of the
/// weights from position `i` on, so each coefficient only ranges over one residue class.
#[derive(Clone, Debug)]
pub struct Knapsack {
    order: Vec<usize>,
    weights: Vec<u128>,
    suffix_gcd: Vec<u128>,
}

impl Knapsack {
    pub fn new(weights: &[u128]) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
        let sorted: Vec<u128> = order.iter().map(|&i| weights[i]).collect();
        let mut suffix_gcd = vec![0u128; sorted.len() + 1];
        for i in (0..sorted.len()).rev() {
            suffix_gcd[i] = sorted[i].gcd(&suffix_gcd[i + 1]);
        }
        Knapsack { order, weights: sorted, suffix_gcd }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Admissible coefficients for position `i` and residual `r`, largest first.
    fn choices(&self, i: usize, r: u128) -> Result<Vec<u128>> {
        let w = self.weights[i];
        let g_next = self.suffix_gcd[i + 1];
        let c_max = r / w;
        if g_next == 0 {
            return Ok(if r % w == 0 { vec![r / w] } else { vec![] });
        }
        let h = w.gcd(&g_next);
        if r % h != 0 {
            return Ok(vec![]);
        }
        let m = g_next / h;
        let inv = mod_inverse_u128(w / h, m).ok_or(Error::Overflow)?;
        let rhs = (r / h) % m;
        let c0 = if m == 1 {
            0
        } else {
            let prod = (rhs as u128).checked_mul(inv).map(|x| x % m);
            match prod {
                Some(x) => x,
                None => mul_mod_u128(rhs, inv, m),
            }
        };
        if c0 > c_max {
            return Ok(vec![]);
        }
        let top = c0 + (c_max - c0) / m * m;
        let mut out = Vec::new();
        let mut c = top;
        loop {
            out.push(c);
            if c < c0 + m {
                break;
            }
            c -= m;
        }
        Ok(out)
    }

    /// Whether `target` is a nonnegative integer combination of the weights.
    pub fn feasible(&self, target: u128, budget: &mut Budget) -> Result<bool> {
        let mut dead = HashSet::new();
        self.feasible_from(0, target, &mut dead, budget)
    }

    fn feasible_from(
        &self,
        i: usize,
        r: u128,
        dead: &mut HashSet<(usize, u128)>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if r == 0 {
            return Ok(true);
        }
        if i == self.weights.len() || r % self.suffix_gcd[i] != 0 {
            return Ok(false);
        }
        if dead.contains(&(i, r)) {
            return Ok(false);
        }
        budget.tick()?;
        for c in self.choices(i, r)? {
            if self.feasible_from(i + 1, r - c * self.weights[i], dead, budget)? {
                return Ok(true);
            }
        }
        dead.insert((i, r));
        Ok(false)
    }

    /// Every coefficient vector (indexed like the constructor's `weights`) reaching `target`.
    pub fn solutions(&self, target: u128, budget: &mut Budget) -> Result<Vec<Vec<u64>>> {
        let mut dead = HashSet::new();
        let mut out = Vec::new();
        let mut stack = vec![0u128; self.weights.len()];
        self.collect(0, target, &mut stack, &mut out, &mut dead, budget)?;
        let mut result: Vec<Vec<u64>> = out
            .into_iter()
            .map(|sorted_coeffs: Vec<u128>| {
                let mut v = vec![0u64; sorted_coeffs.len()];
                for (pos, &orig) in self.order.iter().enumerate() {
                    v[orig] = sorted_coeffs[pos] as u64;
                }
                v
            })
            .collect();
        result.sort();
        Ok(result)
    }

    fn collect(
        &self,
        i: usize,
        r: u128,
        stack: &mut Vec<u128>,
        out: &mut Vec<Vec<u128>>,
        dead: &mut HashSet<(usize, u128)>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if r == 0 {
            for s in stack.iter_mut().skip(i) {
                *s = 0;
            }
            out.push(stack.clone());
            return Ok(true);
        }
        if i == self.weights.len() || r % self.suffix_gcd[i] != 0 || dead.contains(&(i, r)) {
            return Ok(false);
        }
        budget.tick()?;
        let mut any = false;
        for c in self.choices(i, r)? {
            stack[i] = c;
            if self.collect(i + 1, r - c * self.weights[i], stack, out, dead, budget)? {
                any = true;
            }
        }
        if !any {
            dead.insert((i, r));
        }
        Ok(any)
    }
}

fn mul_mod_u128(mut a: u128, mut b: u128, m: u128) -> u128 {
    let mut acc = 0u128;
    a %= m;
    while b > 0 {
        if b & 1 == 1 {
            acc = (acc + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    acc
}
