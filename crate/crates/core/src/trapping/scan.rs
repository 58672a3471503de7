//! Exhaustive scans over all `a`-column subsets.
//!
//! Subsets are visited depth-first in lexicographic order, one rayon task per
//! first column. Each level keeps the running parity of the chosen columns
//! and, for elementary scans, saturating "seen once / twice / three times"
//! masks so that any row reaching weight 3 prunes the whole subtree.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{measure, TrappingSetReport};
use crate::bounds::{binomial, rational_sci};
use crate::error::{domain, Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Default cap on `C(n, a) * rows` subset-row operations per scan.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub a: usize,
    pub elementary_only: bool,
    /// `None` when no qualifying subset exists.
    pub min_b: Option<usize>,
    pub witness: Option<TrappingSetReport>,
    /// Complete `a`-subsets evaluated; elementary scans skip pruned subtrees.
    pub subsets_scanned: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutcome {
    pub a: usize,
    pub b: usize,
    pub elementary_only: bool,
    /// No subset has `1 <= b' < b`.
    pub pass: bool,
    /// Lexicographically first violating subset.
    pub witness: Option<TrappingSetReport>,
    /// Subsets with `1 <= b' < b`.
    pub violations: u64,
    /// Subsets with `b' = 0`, i.e. codeword supports.
    pub codeword_supports: u64,
    /// Smallest positive `b'` seen.
    pub min_positive_b: Option<usize>,
    pub subsets_scanned: u64,
}

/// Refuses scans whose size estimate exceeds `budget`.
pub fn check_budget(h: &BitMatrix, a: usize, budget: u64) -> Result<()> {
    if a == 0 || a > h.ncols() {
        return domain(format!("need 1 <= a <= n = {}, got a = {a}", h.ncols()));
    }
    let subsets = binomial(h.ncols() as u64, a as u64);
    let rows = h.nrows().max(1) as u64;
    let estimate = &subsets * rows;
    if estimate > BigUint::from(budget) {
        return Err(Error::Budget {
            what: format!("scan of all {a}-subsets of {} columns", h.ncols()),
            estimate: format!(
                "C({}, {a}) = {subsets} (~{}) subsets x {rows} rows",
                h.ncols(),
                rational_sci(&subsets, &BigUint::from(1u8), 3)
            ),
            budget: budget.to_string(),
        });
    }
    Ok(())
}

/// Per-level accumulators.
#[derive(Clone)]
struct Level {
    parity: BitVector,
    once: BitVector,
    twice: BitVector,
}

struct Walker<'a, F> {
    cols: &'a [BitVector],
    a: usize,
    elementary: bool,
    stack: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize], &BitVector) -> bool> Walker<'_, F> {
    /// Returns false to abort.
    fn descend(&mut self, level: &Level, start: usize) -> bool {
        let n = self.cols.len();
        let depth = self.stack.len();
        let need = self.a - depth;
        for c in start..=n - need {
            let col = &self.cols[c];
            let mut next = level.clone();
            if self.elementary {
                if level.twice.intersects(col) {
                    continue;
                }
                next.twice.or_and_assign(&level.once, col);
                next.once.or_assign(col);
            }
            next.parity ^= col;
            self.stack.push(c);
            let go = if need == 1 {
                (self.visit)(&self.stack, &next.parity)
            } else {
                self.descend(&next, c + 1)
            };
            self.stack.pop();
            if !go {
                return false;
            }
        }
        true
    }
}

/// Runs `make_visitor()` over every subset starting at each first column, in
/// parallel, and returns the per-first-column results in order.
fn for_each_subset<T, V, F>(h: &BitMatrix, a: usize, elementary: bool, make_visitor: V) -> Vec<(T, u64)>
where
    T: Send,
    V: Fn() -> (T, F) + Sync,
    F: FnMut(&mut T, &[usize], &BitVector) -> bool,
{
    let cols = h.columns();
    let n = cols.len();
    let zero = BitVector::zeros(h.nrows());
    let root = Level {
        parity: zero.clone(),
        once: zero.clone(),
        twice: zero,
    };
    (0..=n - a)
        .into_par_iter()
        .map(|first| {
            let (mut state, mut f) = make_visitor();
            let mut count = 0u64;
            {
                let mut w = Walker {
                    cols: &cols,
                    a,
                    elementary,
                    stack: Vec::with_capacity(a),
                    visit: |s: &[usize], p: &BitVector| {
                        count += 1;
                        f(&mut state, s, p)
                    },
                };
                // Seed the first level by hand so the task owns one column.
                let mut lvl = root.clone();
                let col = &cols[first];
                lvl.parity ^= col;
                lvl.once.or_assign(col);
                w.stack.push(first);
                if a == 1 {
                    (w.visit)(&[first], &lvl.parity);
                } else {
                    w.descend(&lvl, first + 1);
                }
            }
            (state, count)
        })
        .collect()
}

/// Minimum `b` over all `a`-subsets (only elementary ones when asked),
/// including `b = 0`. Ties go to the lexicographically smallest subset.
pub fn exhaustive_min_b(h: &BitMatrix, a: usize, elementary_only: bool, budget: u64) -> Result<SearchOutcome> {
    check_budget(h, a, budget)?;
    let parts = for_each_subset(h, a, elementary_only, || {
        (None::<(usize, Vec<usize>)>, |best: &mut Option<(usize, Vec<usize>)>, s: &[usize], p: &BitVector| {
            let b = p.weight();
            if best.as_ref().is_none_or(|(bb, _)| b < *bb) {
                *best = Some((b, s.to_vec()));
            }
            // Nothing beats zero.
            b != 0
        })
    });
    let scanned = parts.iter().map(|(_, c)| c).sum();
    let best = parts
        .into_iter()
        .filter_map(|(b, _)| b)
        .min_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    let witness = best.as_ref().map(|(_, cols)| measure(h, cols)).transpose()?;
    Ok(SearchOutcome {
        a,
        elementary_only,
        min_b: best.map(|(b, _)| b),
        witness,
        subsets_scanned: scanned,
        exhaustive: true,
    })
}

#[derive(Default)]
struct VerifyState {
    first: Option<Vec<usize>>,
    violations: u64,
    zeros: u64,
    min_pos: Option<usize>,
}

/// Checks that no `a`-subset has `1 <= b' < b`. Codeword supports (`b' = 0`)
/// are counted separately and never fail the check.
pub fn verify_free(h: &BitMatrix, a: usize, b: usize, elementary_only: bool, budget: u64) -> Result<VerifyOutcome> {
    check_budget(h, a, budget)?;
    let parts = for_each_subset(h, a, elementary_only, || {
        (VerifyState::default(), |st: &mut VerifyState, s: &[usize], p: &BitVector| {
            let w = p.weight();
            if w == 0 {
                st.zeros += 1;
            } else {
                st.min_pos = Some(st.min_pos.map_or(w, |m| m.min(w)));
                if w < b {
                    st.violations += 1;
                    if st.first.is_none() {
                        st.first = Some(s.to_vec());
                    }
                }
            }
            true
        })
    });
    let mut total = VerifyState::default();
    let mut scanned = 0;
    for (st, c) in parts {
        scanned += c;
        total.violations += st.violations;
        total.zeros += st.zeros;
        total.min_pos = match (total.min_pos, st.min_pos) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        if total.first.is_none() {
            total.first = st.first;
        }
    }
    Ok(VerifyOutcome {
        a,
        b,
        elementary_only,
        pass: total.violations == 0,
        witness: total.first.map(|c| measure(h, &c)).transpose()?,
        violations: total.violations,
        codeword_supports: total.zeros,
        min_positive_b: total.min_pos,
        subsets_scanned: scanned,
    })
}

/// Up to `limit` codeword supports of size exactly `a` (lexicographic),
/// with the total count.
pub fn codeword_supports(h: &BitMatrix, a: usize, limit: usize, budget: u64) -> Result<(u64, Vec<Vec<usize>>)> {
    check_budget(h, a, budget)?;
    let parts = for_each_subset(h, a, false, || {
        ((0u64, Vec::new()), move |st: &mut (u64, Vec<Vec<usize>>), s: &[usize], p: &BitVector| {
            if p.is_zero() {
                st.0 += 1;
                if st.1.len() < limit {
                    st.1.push(s.to_vec());
                }
            }
            true
        })
    });
    let count = parts.iter().map(|((c, _), _)| c).sum();
    let found = parts.into_iter().flat_map(|((_, v), _)| v).take(limit).collect();
    Ok((count, found))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_columns_give_column_weight() {
        let h = BitMatrix::parse_rows(&["1101", "0111", "1011"]).unwrap();
        let out = exhaustive_min_b(&h, 1, false, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.min_b, Some(2));
        assert_eq!(out.witness.unwrap().columns, vec![0]);
        assert_eq!(out.subsets_scanned, 4);
    }

    #[test]
    fn codeword_wins_with_zero() {
        // Columns 0 and 1 are equal, so {0, 1} has b = 0.
        let h = BitMatrix::parse_rows(&["1100", "1110", "0011"]).unwrap();
        let out = exhaustive_min_b(&h, 2, false, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.min_b, Some(0));
        let v = verify_free(&h, 2, 2, false, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.codeword_supports, 1);
        // {2, 3} has b = 1.
        assert!(!v.pass);
        assert_eq!(v.violations, 1);
        assert_eq!(v.witness.unwrap().columns, vec![2, 3]);
        assert_eq!(v.min_positive_b, Some(1));
        let (count, found) = codeword_supports(&h, 2, 10, DEFAULT_BUDGET).unwrap();
        assert_eq!((count, found), (1, vec![vec![0, 1]]));
    }

    #[test]
    fn elementary_filter() {
        // Every pair of these three columns shares row 0 plus one private row;
        // the triple puts weight 3 on row 0 and is not elementary.
        let h = BitMatrix::parse_rows(&["111", "100", "010", "001"]).unwrap();
        assert_eq!(exhaustive_min_b(&h, 3, false, DEFAULT_BUDGET).unwrap().min_b, Some(4));
        let e = exhaustive_min_b(&h, 3, true, DEFAULT_BUDGET).unwrap();
        assert_eq!((e.min_b, e.subsets_scanned), (None, 0));
        assert_eq!(exhaustive_min_b(&h, 2, true, DEFAULT_BUDGET).unwrap().min_b, Some(2));
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let h = BitMatrix::zeros(3, 40);
        match exhaustive_min_b(&h, 20, false, 1000) {
            Err(Error::Budget { estimate, .. }) => assert!(estimate.contains("137846528820")),
            other => panic!("{other:?}"),
        }
    }
}
