//! The Zaks exponent monoid `N ⊂ ℕ ⊕ ℕ ⊕ ℤ ⊕ ℤ^N`, truncated to `X_1, …, X_depth`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::knapsack::Budget;
use crate::monoid::zaks::{self as kernel, ZaksCombination};

/// Generator vectors of length `depth + 3`, coordinates ordered `U, V, W, X_1, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZaksPresentation {
    pub depth: usize,
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub w: Vec<i64>,
    pub x: Vec<Vec<i64>>,
    pub y: Vec<Vec<i64>>,
}

impl ZaksPresentation {
    pub fn new(depth: usize) -> Self {
        let len = depth + 3;
        ZaksPresentation {
            depth,
            u: kernel::unit_vector(len, 0),
            v: kernel::unit_vector(len, 1),
            w: kernel::unit_vector(len, 2),
            x: (1..=depth).map(|n| kernel::unit_vector(len, n + 2)).collect(),
            y: (1..=depth).map(|n| kernel::y_vector(depth, n)).collect(),
        }
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.depth {
            return Err(Error::IndexOutOfRange(n));
        }
        Ok(())
    }

    /// `y_n` from the definition `Y_n = UV / (W^n X_n)`.
    pub fn y_n(&self, n: usize) -> Result<&[i64]> {
        self.check_index(n)?;
        Ok(&self.y[n - 1])
    }

    /// `(−n, 1, 1, 0, …, −1, …)`, the vector as displayed in the literature.
    pub fn printed_y_n(&self, n: usize) -> Result<Vec<i64>> {
        self.check_index(n)?;
        let mut v = vec![0; self.depth + 3];
        v[0] = -(n as i64);
        v[1] = 1;
        v[2] = 1;
        v[n + 2] = -1;
        Ok(v)
    }

    /// `u + v = n·w + x_n + y` componentwise, for a candidate `y`.
    pub fn relation_holds_with(&self, n: usize, y: &[i64]) -> Result<bool> {
        self.check_index(n)?;
        if y.len() != self.depth + 3 {
            return Err(Error::LengthMismatch { expected: self.depth + 3, got: y.len() });
        }
        let x_n = &self.x[n - 1];
        Ok((0..self.depth + 3).all(|i| self.u[i] + self.v[i] == n as i64 * self.w[i] + x_n[i] + y[i]))
    }
}

/// `u + v = n·w + x_n + y_n` at the given depth.
pub fn zaks_relation_check(depth: usize, n: usize) -> Result<bool> {
    let pres = ZaksPresentation::new(depth);
    let y = pres.y_n(n)?.to_vec();
    pres.relation_holds_with(n, &y)
}

/// Membership of `v` in the truncated monoid.
pub fn zaks_member(pres: &ZaksPresentation, v: &[i64]) -> Result<bool> {
    if v.len() != pres.depth + 3 {
        return Err(Error::LengthMismatch { expected: pres.depth + 3, got: v.len() });
    }
    Ok(kernel::is_member(v))
}

/// Every expression of `v` over the generators.
pub fn zaks_factorizations(pres: &ZaksPresentation, v: &[i64], budget: &mut Budget) -> Result<Vec<ZaksCombination>> {
    if v.len() != pres.depth + 3 {
        return Err(Error::LengthMismatch { expected: pres.depth + 3, got: v.len() });
    }
    kernel::combinations(v, budget)
}
