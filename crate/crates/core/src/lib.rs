//! Exact computations with Puiseux monoids, rank-two monoids, monoid algebras and
//! the pullback domain used to separate ACCP from weak-ACCP.

pub mod algebra;
pub mod bc;
pub mod chain;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod monoid;
pub mod report;
pub mod zaks;

pub use error::{Error, Result};
pub use exact::Rational;
pub use monoid::{MonoidValue, Presentation};
