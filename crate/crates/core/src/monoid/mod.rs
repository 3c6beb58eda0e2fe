//! Monoid presentations and the truncated decision kernel.

pub mod kernel;
pub mod knapsack;
pub mod presentation;
pub mod rank_two;
pub mod value;
pub mod zaks;

pub use kernel::{
    atoms, common_divisors, divides, factorizations, generators, length_set, member, Factorization, Kernel,
    DEFAULT_BUDGET,
};
pub use knapsack::Budget;
pub use presentation::{Family, GdFamily, Presentation};
pub use value::{MonoidValue, ValueTag};
