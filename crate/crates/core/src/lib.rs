//! Exact computations around parking-space characters of complex reflection
//! groups: generalized q-Catalan numbers, their polynomiality and
//! integrality conditions, character decompositions, Schur-function
//! specializations and nonnegativity certificates.

pub mod error;
pub mod exact;
pub mod certify;
pub mod characters;
pub mod groups;
pub mod partitions;
pub mod symfunc;

pub use error::{Error, Result};
