//! Computational finite semigroup theory centered on the smallest
//! congruence with a Mal'cev-nilpotent quotient (η*), principal series
//! and their Rees-matrix coordinates, quotient groups of completely
//! 0-simple factors, η*-roots, minimal non-nilpotent representations,
//! and pseudovariety membership testing.

pub mod corpus;
pub mod error;
pub mod eta;
pub mod green;
pub mod group;
pub mod io;
pub mod malcev;
pub mod pseudo;
pub mod rees;
pub mod report;
pub mod repr;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::FiniteSemigroup;
