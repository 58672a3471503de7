//! Bit-packed linear algebra over GF(2).

pub mod alist;
mod matrix;
mod vector;

pub use matrix::{BitMatrix, EchelonBasis, Extension, OddRowProfile};
pub use vector::BitVector;

pub(crate) use matrix::check_index_set;

use rand::Rng;

/// Uniform draw from the span of `basis` (rows assumed independent).
pub fn sample_dual_codeword<R: Rng + ?Sized>(basis: &BitMatrix, rng: &mut R) -> BitVector {
    basis.sample_span(rng)
}
