//! Exact computations with graded commutative 2-rings built from finite graded rings.

pub mod error;
pub mod fixtures;
pub mod grading;
pub mod ideals;
pub mod json;
pub mod linalg;
pub mod localization;
pub mod ring;
pub mod spectrum;
pub mod support;
pub mod two_ring;
pub mod verify;

pub use error::{Error, Result};
