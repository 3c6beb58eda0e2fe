use std::collections::BTreeMap;

use serde::Serialize;

use super::field::FieldSpec;
use super::poly::PolyExpr;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::monoid::MonoidValue;

/// Image of `f ∈ F[M]` in `F[X; ℚ][x]` under `Y^{n₀β + q} ↦ X^q x^{n₀}`.
///
/// Keys are powers of `x`; values map rational exponents of `X` to coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rank2Embedding {
    pub field: FieldSpec,
    pub coeffs: BTreeMap<u64, BTreeMap<Rational, Rational>>,
}

impl Rank2Embedding {
    pub fn deg_x(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn ord_x(&self) -> Option<u64> {
        self.coeffs.keys().next().copied()
    }
}

pub fn rank2_embed(f: &PolyExpr) -> Result<Rank2Embedding> {
    let mut coeffs: BTreeMap<u64, BTreeMap<Rational, Rational>> = BTreeMap::new();
    for (e, c) in f.terms() {
        let MonoidValue::RankTwo { beta, q } = e else { return Err(Error::TagMismatch) };
        coeffs.entry(*beta).or_default().insert(q.clone(), c.clone());
    }
    Ok(Rank2Embedding { field: f.field(), coeffs })
}

pub fn rank2_unembed(g: &Rank2Embedding) -> Result<PolyExpr> {
    PolyExpr::from_terms(
        g.field,
        g.coeffs.iter().flat_map(|(&beta, inner)| {
            inner.iter().map(move |(q, c)| (MonoidValue::RankTwo { beta, q: q.clone() }, c.clone()))
        }),
    )
}
