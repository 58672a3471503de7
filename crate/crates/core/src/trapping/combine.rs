use serde::Serialize;

use crate::error::{domain, Result};
use crate::gf2::{check_index_set, BitMatrix, BitVector};

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All nonzero sums of at most `t` rows of a full-rank `h`, ordered by the
/// number of rows summed and then lexicographically.
pub fn build_combination_matrix(h: &BitMatrix, t: usize) -> Result<BitMatrix> {
    let r = h.nrows();
    if h.rank() != r {
        return domain(format!("rows must be independent (rank {} < {r} rows)", h.rank()));
    }
    if t == 0 || t > r {
        return domain(format!("need 1 <= t <= r = {r}, got t = {t}"));
    }
    let mut out = BitMatrix::empty(h.ncols());
    for size in 1..=t {
        let mut err = Ok(());
        for_each_combination(r, size, |combo| {
            if err.is_ok() {
                err = h.combine_rows(combo).and_then(|v| out.push_row(v));
            }
        });
        err?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BreakCandidate {
    /// Row indices of `h` that are summed.
    pub combo: Vec<usize>,
    pub restriction_weight: usize,
    pub full_weight: usize,
    #[serde(skip)]
    pub row: BitVector,
}

#[derive(Debug, Clone, Serialize)]
pub struct BreakResult {
    pub columns: Vec<usize>,
    pub max_combo_size: usize,
    /// Rows of `h` that meet the column set; only these are combined.
    pub touching_rows: Vec<usize>,
    /// Whether the columns of `h` on `columns` are linearly independent.
    pub columns_independent: bool,
    pub candidates: Vec<BreakCandidate>,
    /// Set when no candidate was found within `max_combo_size`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Rows that, appended to `h`, make the restriction to `columns` gain one odd
/// row: sums of up to `max_combo_size` rows meeting the set, whose restriction
/// has odd weight. Sorted by (combo size, full weight, combo indices).
pub fn break_trapping_set(h: &BitMatrix, columns: &[usize], max_combo_size: usize) -> Result<BreakResult> {
    check_index_set(columns, h.ncols(), "column")?;
    if max_combo_size == 0 {
        return domain("max_combo_size must be positive");
    }
    let restricted = h.restriction(columns)?;
    let touching: Vec<usize> = (0..h.nrows()).filter(|&r| !restricted.row(r).is_zero()).collect();
    let columns_independent = restricted.transpose().rank() == columns.len();

    let mut candidates = Vec::new();
    for size in 1..=max_combo_size.min(touching.len()) {
        for_each_combination(touching.len(), size, |pick| {
            let mut rv = BitVector::zeros(columns.len());
            for &p in pick {
                rv ^= restricted.row(touching[p]);
            }
            let w = rv.weight();
            if w % 2 == 1 {
                let combo: Vec<usize> = pick.iter().map(|&p| touching[p]).collect();
                let row = h.combine_rows(&combo).expect("indices are valid");
                candidates.push(BreakCandidate {
                    combo,
                    restriction_weight: w,
                    full_weight: row.weight(),
                    row,
                });
            }
        });
    }
    candidates.sort_by(|x, y| {
        (x.combo.len(), x.full_weight, &x.combo).cmp(&(y.combo.len(), y.full_weight, &y.combo))
    });
    let note = candidates
        .is_empty()
        .then(|| format!("no odd combination of at most {max_combo_size} rows"));
    let mut cols = columns.to_vec();
    cols.sort_unstable();
    Ok(BreakResult {
        columns: cols,
        max_combo_size,
        touching_rows: touching,
        columns_independent,
        candidates,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{golay24, hamming7};
    use crate::trapping::{measure, verify_free, DEFAULT_BUDGET};

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn combination_matrix_sizes() {
        let h = hamming7().h;
        assert_eq!(build_combination_matrix(&h, 1).unwrap(), h);
        assert_eq!(build_combination_matrix(&h, 2).unwrap().nrows(), 6);
        assert!(build_combination_matrix(&h, 4).is_err());
        let g = build_combination_matrix(&golay24().h, 2).unwrap();
        assert_eq!(g.nrows(), 78);
        assert_eq!(g.rank(), 12);
    }

    #[test]
    fn hamming_pairs_reach_r() {
        let h = build_combination_matrix(&hamming7().h, 2).unwrap();
        for a in 1..=2 {
            let v = verify_free(&h, a, 3, false, DEFAULT_BUDGET).unwrap();
            assert!(v.pass && v.min_positive_b >= Some(3));
        }
    }

    #[test]
    fn appending_a_candidate_adds_one_odd_row() {
        let h = golay24().h;
        let cols = [0, 5, 17];
        let res = break_trapping_set(&h, &cols, 3).unwrap();
        assert!(res.columns_independent);
        assert!(!res.candidates.is_empty());
        let before = measure(&h, &cols).unwrap().b;
        let mut h2 = h.clone();
        h2.push_row(res.candidates[0].row.clone()).unwrap();
        assert_eq!(measure(&h2, &cols).unwrap().b, before + 1);
    }

    #[test]
    fn single_odd_row_comes_first() {
        let h = BitMatrix::parse_rows(&["1100", "1000", "0011"]).unwrap();
        let res = break_trapping_set(&h, &[0, 1], 2).unwrap();
        assert_eq!(res.candidates[0].combo, vec![1]);
        assert_eq!(res.touching_rows, vec![0, 1]);
    }
}
