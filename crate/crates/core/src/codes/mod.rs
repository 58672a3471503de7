//! The codes under study and small reference codes.

mod margulis;
mod pg;
mod reference;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::gf2::{BitMatrix, BitVector};

pub use margulis::{build_margulis, build_margulis_with, sl2_elements, MargulisRule, MARGULIS_RULE};
pub use pg::build_pg_code;
pub use reference::{code_from_alist, golay24, hamming7, repetition, GOLAY_GENERATOR};

/// Largest `n - k` for which [`full_dual_matrix`] will materialize `2^(n-k)` rows.
pub const MAX_DUAL_RANK: usize = 20;
/// Largest `k` for exhaustive codeword enumeration.
pub const MAX_ENUM_DIM: usize = 20;

/// Minimum distance, tagged by how it is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "value")]
pub enum Distance {
    Exact(u64),
    Estimated(u64),
    Unknown,
}

impl Distance {
    /// Any value, known or estimated.
    pub fn value(&self) -> Option<u64> {
        match *self {
            Distance::Exact(d) | Distance::Estimated(d) => Some(d),
            Distance::Unknown => None,
        }
    }
}

/// How a code was built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjacency_rule: Option<String>,
}

impl Provenance {
    pub(crate) fn new(construction: &str) -> Self {
        Self {
            construction: construction.into(),
            params: BTreeMap::new(),
            modulus: None,
            adjacency_rule: None,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }
}

#[derive(Debug, Clone)]
pub struct LinearCode {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub dual_distance: Option<Distance>,
    /// Parity-check matrix, possibly with redundant rows.
    pub h: BitMatrix,
    pub provenance: Provenance,
}

/// JSON-friendly summary of a code, without the matrix.
#[derive(Debug, Clone, Serialize)]
pub struct CodeDescriptor<'a> {
    pub n: usize,
    pub k: usize,
    pub rows: usize,
    pub rank: usize,
    pub d: Distance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_distance: Option<Distance>,
    pub provenance: &'a Provenance,
}

impl LinearCode {
    /// Builds a code from its parity-check matrix; `k` comes from the rank.
    pub fn from_parity_check(h: BitMatrix, d: Distance, provenance: Provenance) -> Self {
        let k = h.ncols() - h.rank();
        Self {
            n: h.ncols(),
            k,
            d,
            dual_distance: None,
            h,
            provenance,
        }
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// More rows than `n - k`.
    pub fn is_redundant(&self) -> bool {
        self.h.nrows() > self.redundancy()
    }

    pub fn descriptor(&self) -> CodeDescriptor<'_> {
        CodeDescriptor {
            n: self.n,
            k: self.k,
            rows: self.h.nrows(),
            rank: self.redundancy(),
            d: self.d,
            dual_distance: self.dual_distance,
            provenance: &self.provenance,
        }
    }

    /// A basis of the code itself (`k` rows).
    pub fn generator(&self) -> BitMatrix {
        self.h.dual_basis()
    }

    /// Exact minimum distance by enumerating all `2^k` codewords.
    pub fn enumerate_distance(&self) -> Result<u64> {
        min_weight_of_span(&self.generator())
    }
}

/// Smallest nonzero weight in the row space of `basis` (Gray-code walk).
pub fn min_weight_of_span(basis: &BitMatrix) -> Result<u64> {
    let r = basis.rank();
    if r != basis.nrows() {
        return domain("basis rows must be linearly independent");
    }
    if r > MAX_ENUM_DIM {
        return Err(Error::Budget {
            what: "codeword enumeration".into(),
            estimate: format!("2^{r}"),
            budget: format!("2^{MAX_ENUM_DIM}"),
        });
    }
    if r == 0 {
        return domain("the span is trivial");
    }
    let mut v = BitVector::zeros(basis.ncols());
    let mut best = u64::MAX;
    for i in 1u64..1 << r {
        v ^= basis.row(i.trailing_zeros() as usize);
        best = best.min(v.weight() as u64);
    }
    Ok(best)
}

/// All `2^(n-k)` dual codewords: row `i` is the sum of the echelon basis rows
/// selected by the bits of `i` (least significant bit first), so row 0 is zero.
pub fn full_dual_matrix(code: &LinearCode) -> Result<BitMatrix> {
    let (basis, _) = code.h.rref();
    let r = basis.len();
    if r > MAX_DUAL_RANK {
        return Err(Error::Budget {
            what: "full dual codebook".into(),
            estimate: format!("2^{r} rows"),
            budget: format!("2^{MAX_DUAL_RANK} rows"),
        });
    }
    let mut rows = Vec::with_capacity(1 << r);
    rows.push(BitVector::zeros(code.n));
    for i in 1usize..1 << r {
        let low = i.trailing_zeros() as usize;
        let mut v = rows[i & (i - 1)].clone();
        v ^= &basis[low];
        rows.push(v);
    }
    BitMatrix::from_rows(code.n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_dual_codebook() {
        let c = hamming7();
        let full = full_dual_matrix(&c).unwrap();
        assert_eq!((full.nrows(), full.ncols()), (8, 7));
        assert!(full.row(0).is_zero());
        assert_eq!(full.rank(), 3);
        for i in 0..7 {
            for j in i + 1..7 {
                assert_eq!(full.odd_row_profile(&[i, j]).unwrap().b, 4);
            }
            assert_eq!(full.odd_row_profile(&[i]).unwrap().b, 4);
        }
        let rep = full_dual_matrix(&repetition(4).unwrap()).unwrap();
        assert_eq!((rep.nrows(), rep.ncols()), (8, 4));
        assert!((0..4).all(|c| rep.odd_row_profile(&[c]).unwrap().b == 4));
    }

    #[test]
    fn distance_tags() {
        assert_eq!(Distance::Estimated(40).value(), Some(40));
        assert_eq!(Distance::Unknown.value(), None);
        let json = serde_json::to_string(&Distance::Exact(8)).unwrap();
        assert_eq!(json, r#"{"status":"exact","value":8}"#);
    }

    #[test]
    fn dual_guard() {
        let c = LinearCode::from_parity_check(BitMatrix::identity(21), Distance::Unknown, Provenance::new("identity"));
        assert!(matches!(full_dual_matrix(&c), Err(Error::Budget { .. })));
    }
}
