//! Exact computations in the rank-one rational Cherednik algebra over ℤ[c]
//! and its divided power extension.

pub mod construction;
pub mod error;
pub mod expr;
pub mod intval;
pub mod json;
pub mod lattice;
pub mod mode;
pub mod opalgebra;
pub mod poly;
pub mod sample;
pub mod sl2;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use mode::{DunklMode, Sign};
