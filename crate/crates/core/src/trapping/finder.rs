//! Depth-first search for connected elementary trapping sets through a root.

use std::collections::BTreeSet;

use crate::error::{domain, Result};
use crate::gf2::{check_index_set, BitMatrix};

#[derive(Debug, Clone, Copy)]
pub struct FinderLimits {
    /// Stop after this many distinct sets.
    pub max_results: usize,
    /// Stop after this many search nodes.
    pub max_nodes: u64,
}

impl Default for FinderLimits {
    fn default() -> Self {
        Self {
            max_results: 64,
            max_nodes: 50_000_000,
        }
    }
}

struct Search<'a> {
    col_checks: &'a [Vec<usize>],
    row_vars: &'a [Vec<usize>],
    a: usize,
    b: usize,
    count: Vec<u8>,
    is_final: Vec<bool>,
    in_set: Vec<bool>,
    set: Vec<usize>,
    finals: usize,
    ones: usize,
    nodes: u64,
    seen: Vec<u64>,
    stamp: u64,
    max_w: usize,
    all_odd: bool,
    limits: FinderLimits,
    found: BTreeSet<Vec<usize>>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.found.len() >= self.limits.max_results || self.nodes >= self.limits.max_nodes
    }

    fn add(&mut self, v: usize) {
        self.in_set[v] = true;
        self.set.push(v);
        for &c in &self.col_checks[v] {
            self.count[c] += 1;
            match self.count[c] {
                1 => self.ones += 1,
                2 => self.ones -= 1,
                _ => unreachable!("elementary search never reaches weight 3"),
            }
        }
    }

    fn remove(&mut self, v: usize) {
        self.in_set[v] = false;
        self.set.pop();
        for &c in &self.col_checks[v] {
            match self.count[c] {
                1 => self.ones -= 1,
                2 => self.ones += 1,
                _ => unreachable!(),
            }
            self.count[c] -= 1;
        }
    }

    /// Sum of the `r` largest counts of open checks met by an admissible
    /// outside column.
    fn closing_capacity(&mut self, r: usize) -> usize {
        self.stamp += 1;
        let mut hits = vec![0usize; self.max_w + 1];
        for i in 0..self.set.len() {
            let u = self.set[i];
            for &c in &self.col_checks[u] {
                if self.count[c] != 1 || self.is_final[c] {
                    continue;
                }
                for &v in &self.row_vars[c] {
                    if self.in_set[v] || self.seen[v] == self.stamp {
                        continue;
                    }
                    self.seen[v] = self.stamp;
                    let mut h = 0;
                    let mut ok = true;
                    for &d in &self.col_checks[v] {
                        match self.count[d] {
                            0 => {}
                            1 if !self.is_final[d] => h += 1,
                            _ => ok = false,
                        }
                    }
                    if ok {
                        hits[h] += 1;
                    }
                }
            }
        }
        let mut left = r;
        let mut total = 0;
        for h in (1..hits.len()).rev() {
            let take = hits[h].min(left);
            total += take * h;
            left -= take;
        }
        total
    }

    fn first_open(&self) -> Option<usize> {
        self.set
            .iter()
            .flat_map(|&v| self.col_checks[v].iter().copied())
            .filter(|&c| self.count[c] == 1 && !self.is_final[c])
            .min()
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.done() {
            return;
        }
        let remaining = self.a - self.set.len();
        if remaining == 0 {
            if self.ones == self.b {
                let mut s = self.set.clone();
                s.sort_unstable();
                self.found.insert(s);
            }
            return;
        }
        // A new column of weight w changes the number of weight-one checks
        // by w - 2k after closing k of them.
        if self.all_odd && (self.ones + remaining + self.b) % 2 == 1 {
            return;
        }
        if self.ones + remaining * (self.max_w.max(2) - 2) < self.b {
            return;
        }
        let open = self.ones - self.finals;
        if open > self.max_w * remaining + (self.b - self.finals) {
            return;
        }
        // Open checks beyond the b - finals that may stay odd must each be
        // closed by a new column, and a column closes only the open checks it
        // already touches.
        let must_close = (open + self.finals).saturating_sub(self.b);
        if must_close > 0 && self.closing_capacity(remaining) < must_close {
            return;
        }
        let Some(c) = self.first_open() else {
            return;
        };
        if self.finals < self.b {
            self.is_final[c] = true;
            self.finals += 1;
            self.run();
            self.finals -= 1;
            self.is_final[c] = false;
        }
        for i in 0..self.row_vars[c].len() {
            let v = self.row_vars[c][i];
            if self.in_set[v] {
                continue;
            }
            let ok = self.col_checks[v]
                .iter()
                .all(|&d| self.count[d] == 0 || (self.count[d] == 1 && !self.is_final[d]));
            if !ok {
                continue;
            }
            self.add(v);
            self.run();
            self.remove(v);
            if self.done() {
                return;
            }
        }
    }
}

/// Connected elementary `(a, b)` trapping sets containing `root`, as sorted
/// column lists in lexicographic order. Each check of weight one inside the
/// set is either kept as one of the `b` odd checks or closed by adding one of
/// its other columns, so the search is complete up to `limits`.
pub fn find_elementary_sets(
    h: &BitMatrix,
    root: usize,
    a: usize,
    b: usize,
    limits: FinderLimits,
) -> Result<(Vec<Vec<usize>>, u64)> {
    check_index_set(&[root], h.ncols(), "column")?;
    if a == 0 {
        return domain("a must be positive");
    }
    let row_vars = h.supports();
    let mut col_checks = vec![Vec::new(); h.ncols()];
    for (r, s) in row_vars.iter().enumerate() {
        for &c in s {
            col_checks[c].push(r);
        }
    }
    if col_checks.iter().any(|c| c.len() > 255) {
        return domain("column weight too large");
    }
    let mut s = Search {
        col_checks: &col_checks,
        row_vars: &row_vars,
        a,
        b,
        count: vec![0; h.nrows()],
        is_final: vec![false; h.nrows()],
        in_set: vec![false; h.ncols()],
        set: Vec::with_capacity(a),
        finals: 0,
        ones: 0,
        nodes: 0,
        seen: vec![0; h.ncols()],
        stamp: 0,
        max_w: col_checks.iter().map(Vec::len).max().unwrap_or(0),
        all_odd: col_checks.iter().all(|c| c.len() % 2 == 1),
        limits,
        found: BTreeSet::new(),
    };
    s.add(root);
    s.run();
    Ok((s.found.into_iter().collect(), s.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trapping::{measure, table4_fixture};

    #[test]
    fn finds_the_fixture_sets() {
        // Without the weight-one padding columns.
        let fx = table4_fixture(false);
        let h = fx.h.restriction(&(0..14).collect::<Vec<_>>()).unwrap();
        let limits = FinderLimits {
            max_results: usize::MAX,
            ..FinderLimits::default()
        };
        let (sets, nodes) = find_elementary_sets(&h, 0, 12, 4, limits).unwrap();
        assert!(nodes < limits.max_nodes);
        assert!(sets.contains(&fx.basic_columns), "{} sets", sets.len());
        for s in &sets {
            let r = measure(&h, s).unwrap();
            assert!(r.elementary && r.b == 4);
        }
    }

    fn connected(h: &BitMatrix, cols: &[usize]) -> bool {
        let mut seen = vec![cols[0]];
        let mut frontier = vec![cols[0]];
        while let Some(v) = frontier.pop() {
            for &u in cols {
                if !seen.contains(&u) && (0..h.nrows()).any(|r| h.get(r, v) && h.get(r, u)) {
                    seen.push(u);
                    frontier.push(u);
                }
            }
        }
        seen.len() == cols.len()
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..30 {
            // 12 columns over 9 rows, of weight 3 or of mixed weight 2 and 3.
            let mut h = BitMatrix::zeros(9, 12);
            for c in 0..12 {
                let w = if trial % 2 == 0 { 3 } else { rng.random_range(2..=3) };
                let mut placed = 0;
                while placed < w {
                    let r = rng.random_range(0..9);
                    if !h.get(r, c) {
                        h.set(r, c, true);
                        placed += 1;
                    }
                }
            }
            for a in 1..=5 {
                for b in 0..=4 {
                    let (sets, _) = find_elementary_sets(&h, 0, a, b, FinderLimits::default()).unwrap();
                    let mut brute = Vec::new();
                    for mask in 0u32..1 << 12 {
                        if mask & 1 == 0 || mask.count_ones() as usize != a {
                            continue;
                        }
                        let cols: Vec<usize> = (0..12).filter(|i| mask >> i & 1 == 1).collect();
                        let r = measure(&h, &cols).unwrap();
                        if r.elementary && r.b == b && connected(&h, &cols) {
                            brute.push(cols);
                        }
                    }
                    brute.sort();
                    assert_eq!(sets, brute, "a = {a}, b = {b}");
                }
            }
        }
    }
}
