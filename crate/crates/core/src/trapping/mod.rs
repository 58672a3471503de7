//! Trapping-set measurement, exhaustive scans, randomized matrix sampling and
//! redundant-row construction.

mod combine;
mod expansion;
mod finder;
mod sample;
mod scan;

use serde::Serialize;

use crate::error::Result;
use crate::gf2::BitMatrix;

pub use combine::{break_trapping_set, build_combination_matrix, BreakCandidate, BreakResult};
pub use expansion::{margulis_expansion, table4_fixture, Combo, Expansion, ExpansionConfig, Table4Fixture};
pub use finder::{find_elementary_sets, FinderLimits};
pub use sample::{sample_lll_matrix, AttemptRecord, SampleOutcome};
pub use scan::{
    check_budget, codeword_supports, exhaustive_min_b, verify_free, SearchOutcome, VerifyOutcome, DEFAULT_BUDGET,
};

/// Odd-row structure of one column set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrappingSetReport {
    pub columns: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub elementary: bool,
    pub odd_rows: Vec<usize>,
    pub max_restriction_row_weight: usize,
}

/// Measures the restriction of `h` to `columns`. Columns are reported sorted.
pub fn measure(h: &BitMatrix, columns: &[usize]) -> Result<TrappingSetReport> {
    let profile = h.odd_row_profile(columns)?;
    let mut cols = columns.to_vec();
    cols.sort_unstable();
    Ok(TrappingSetReport {
        a: cols.len(),
        columns: cols,
        b: profile.b,
        elementary: profile.max_row_weight <= 2,
        odd_rows: profile.odd_rows,
        max_restriction_row_weight: profile.max_row_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{full_dual_matrix, hamming7};

    #[test]
    fn measure_full_dual_pairs() {
        let full = full_dual_matrix(&hamming7()).unwrap();
        let r = measure(&full, &[4, 1]).unwrap();
        assert_eq!((r.a, r.b, r.columns.clone()), (2, 4, vec![1, 4]));
        assert!(r.elementary);
        assert_eq!(r.odd_rows.len(), r.b);
    }

    #[test]
    fn codeword_support_has_no_odd_rows() {
        let c = hamming7();
        // 1110000 is a codeword: columns 1, 2, 3 (values 1, 2, 3) sum to zero.
        let r = measure(&c.h, &[0, 1, 2]).unwrap();
        assert_eq!(r.b, 0);
        assert!(measure(&c.h, &[0, 0]).is_err());
    }
}
