//! The pullback domain `R = {g ∈ K[X] : g(0) ∈ D₁, g(1) ∈ D₂}` over `K = ℚ(x, y)`.

pub mod bivariate;
pub mod kpoly;
pub mod kvalue;
pub mod theorem;

pub use bivariate::BivariatePoly;
pub use kpoly::KPoly;
pub use kvalue::{expand, in_d, in_d1, in_d2, in_overring, normal_form, Expansion, KValue, NormalForm2, Overring};
pub use theorem::{
    accp_element_bc, ascending_chain_by_x, in_r, is_unit_r, weak_accp_divisor_bc, BcDivisorReport, ChainStep,
};
