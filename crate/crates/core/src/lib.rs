//! Generalized test ideals, F-pure thresholds and F-jumping numbers for
//! ideals built as sums of products of a fixed family of primes.

pub mod cli;
pub mod error;
pub mod family;
pub mod geometry;
pub mod limits;
pub mod minors;
pub mod monomial;

pub use error::{Error, Result};
