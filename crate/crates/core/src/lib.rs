//! Trapping-set redundancy of binary linear codes: GF(2) linear algebra,
//! finite geometries, reference codes, trapping-set scans and row-count bounds.

pub mod bounds;
pub mod codes;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod tables;
pub mod trapping;

pub use error::{Error, Result};

/// Exact probabilities and certificates.
pub type Rational = num_rational::BigRational;
/// Exact counts.
pub type Natural = num_bigint::BigUint;
