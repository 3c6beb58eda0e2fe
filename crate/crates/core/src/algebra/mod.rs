//! Monoid algebras `F[M]`, their localizations and the ring-side constructions.

pub mod divide;
pub mod field;
pub mod intersection;
pub mod localization;
pub mod poly;
pub mod rank2;
pub mod zaks_map;

pub use divide::{common_divisor_units_only, divides_in_algebra, min_support_divisor, CommonDivisors, Division, ExponentMonoid};
pub use field::FieldSpec;
pub use intersection::{antimatter_factors, antimatter_split, in_dyadic_monoid, intersection_normal_form, IntersectionForm};
pub use localization::{is_unit_localized, localization_chain_check, ChainRing, LocalizedElement};
pub use poly::PolyExpr;
pub use rank2::{rank2_embed, rank2_unembed, Rank2Embedding};
pub use zaks_map::{zaks_algebra_map, ZaksWord};

/// `poly_mul` under its conventional name.
pub fn poly_mul(f: &PolyExpr, g: &PolyExpr) -> crate::error::Result<PolyExpr> {
    f.mul(g)
}

/// Units of `F[M]` for reduced `M`.
pub fn is_unit(f: &PolyExpr) -> bool {
    f.is_unit()
}
