//! Exponent monoid of the Zaks domain: vectors over `(U, V, W, X_1, …, X_N)` generated by
//! `u, v, w, x_n` and `y_n = u + v − n·w − x_n` (the exponent of `UV/(W^n X_n)`).

use serde::Serialize;

use super::knapsack::Budget;
use crate::error::{Error, Result};

pub fn unit_vector(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

pub fn y_vector(depth: usize, n: usize) -> Vec<i64> {
    let mut v = vec![0; depth + 3];
    v[0] = 1;
    v[1] = 1;
    v[2] = -(n as i64);
    v[n + 2] = -1;
    v
}

/// `u, v, w, x_1..x_N, y_1..y_N`.
pub fn generator_vectors(depth: usize) -> Vec<Vec<i64>> {
    let len = depth + 3;
    let mut gens: Vec<Vec<i64>> = (0..3).map(|i| unit_vector(len, i)).collect();
    gens.extend((1..=depth).map(|n| unit_vector(len, n + 2)));
    gens.extend((1..=depth).map(|n| y_vector(depth, n)));
    gens
}

/// Coefficients of one expression `a·u + b·v + c·w + Σ d_n x_n + Σ e_n y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZaksCombination {
    pub u: u64,
    pub v: u64,
    pub w: u64,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
}

impl ZaksCombination {
    /// Coefficients in the order of [`generator_vectors`].
    pub fn flat(&self) -> Vec<u64> {
        let mut out = vec![self.u, self.v, self.w];
        out.extend(&self.x);
        out.extend(&self.y);
        out
    }
}

/// Every expression of `target` over the depth-`N` generators.
///
/// The `y`-coefficients determine all others: `a = v_0 − Σe`, `b = v_1 − Σe`,
/// `c = v_2 + Σ n e_n`, `d_n = v_{n+2} + e_n`; the U and V coordinates bound `Σe`.
pub fn combinations(target: &[i64], budget: &mut Budget) -> Result<Vec<ZaksCombination>> {
    let depth = target.len().checked_sub(3).ok_or(Error::LengthMismatch { expected: 3, got: target.len() })?;
    let mut out = Vec::new();
    if target[0] < 0 || target[1] < 0 {
        return Ok(out);
    }
    let cap = target[0].min(target[1]) as u64;
    let lo: Vec<u64> = (1..=depth).map(|n| (-target[n + 2]).max(0) as u64).collect();
    if lo.iter().sum::<u64>() > cap {
        return Ok(out);
    }
    let mut e = lo.clone();
    enumerate(target, depth, 0, cap - lo.iter().sum::<u64>(), &mut e, &lo, &mut out, budget)?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    target: &[i64],
    depth: usize,
    idx: usize,
    slack: u64,
    e: &mut Vec<u64>,
    lo: &[u64],
    out: &mut Vec<ZaksCombination>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if idx == depth {
        let total: u64 = e.iter().sum();
        let weighted: i64 = e.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * x as i64).sum();
        let c = target[2] + weighted;
        if c < 0 {
            return Ok(());
        }
        out.push(ZaksCombination {
            u: (target[0] as u64) - total,
            v: (target[1] as u64) - total,
            w: c as u64,
            x: (0..depth).map(|i| (target[i + 3] + e[i] as i64) as u64).collect(),
            y: e.clone(),
        });
        return Ok(());
    }
    for extra in 0..=slack {
        e[idx] = lo[idx] + extra;
        enumerate(target, depth, idx + 1, slack - extra, e, lo, out, budget)?;
    }
    e[idx] = lo[idx];
    Ok(())
}

/// Closed-form membership: feasible iff the forced lower bounds fit under the U/V cap
/// and putting all remaining slack on `y_N` makes the W coordinate nonnegative.
pub fn is_member(target: &[i64]) -> bool {
    if target.len() < 3 || target[0] < 0 || target[1] < 0 {
        return false;
    }
    let depth = target.len() - 3;
    let cap = target[0].min(target[1]);
    let lo: Vec<i64> = (1..=depth).map(|n| (-target[n + 2]).max(0)).collect();
    let used: i64 = lo.iter().sum();
    if used > cap {
        return false;
    }
    let mut weighted: i64 = lo.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * x).sum();
    weighted += depth as i64 * (cap - used);
    if depth == 0 {
        weighted = 0;
    }
    target[2] + weighted >= 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_and_factorization_count() {
        for depth in 1..=6 {
            let len = depth + 3;
            let mut uv = vec![0; len];
            uv[0] = 1;
            uv[1] = 1;
            let mut b = Budget::new(100_000);
            let combos = combinations(&uv, &mut b).unwrap();
            assert_eq!(combos.len(), depth + 1);
            assert!(is_member(&uv));
        }
    }

    #[test]
    fn membership_matches_enumeration() {
        let depth = 2;
        let mut b = Budget::new(10_000_000);
        for a in -1..=2 {
            for bb in -1..=2 {
                for c in -3..=2 {
                    for d1 in -2..=1 {
                        for d2 in -2..=1 {
                            let t = vec![a, bb, c, d1, d2];
                            let n = combinations(&t, &mut b).unwrap().len();
                            assert_eq!(is_member(&t), n > 0, "{t:?}");
                        }
                    }
                }
            }
        }
        let _ = depth;
    }
}
