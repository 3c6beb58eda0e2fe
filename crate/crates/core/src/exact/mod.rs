//! Exact arithmetic: rationals and prime sequences.

pub mod primes;
pub mod rational;

pub use primes::{
    is_prime_u64, nth_prime, sparse_prime_sequence, sparse_reciprocal_bound, PrimeSeq, SparseBound,
};
pub use rational::Rational;
