//! Weighted tilings, layered permutation and partition statistics, and the
//! q-Fibonacci identities they satisfy.

pub mod error;
pub mod expr;
pub mod identities;
pub mod lgv;
pub mod poly;
pub mod registry;
pub mod statistics;
pub mod tiling;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial};
