use std::collections::VecDeque;
use std::fmt;

use rand::Rng;

use super::vector::BitVector;
use crate::error::{domain, Error, Result};

/// Row-major bit-packed binary matrix.
///
/// Duplicate and zero rows are legal: redundant parity-check matrices are the
/// whole point of this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

/// Odd-row statistics of a column restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddRowProfile {
    /// Number of rows whose restriction has odd weight.
    pub b: usize,
    pub odd_rows: Vec<usize>,
    /// Largest row weight inside the restriction.
    pub max_row_weight: usize,
}

/// Result of [`BitMatrix::extend_to_full_rank`].
#[derive(Debug, Clone)]
pub struct Extension {
    pub matrix: BitMatrix,
    pub appended: usize,
}

/// Checks that `cols` are distinct indices below `n`.
pub(crate) fn check_index_set(indices: &[usize], n: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; n];
    for &c in indices {
        if c >= n {
            return domain(format!("{what} index {c} out of range (< {n})"));
        }
        if std::mem::replace(&mut seen[c], true) {
            return domain(format!("duplicate {what} index {c}"));
        }
    }
    Ok(())
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVector::from_indices(n, [i])).collect(),
        }
    }

    /// An empty (0-row) matrix with `cols` columns.
    pub fn empty(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return domain(format!(
                "row {bad} has length {} but matrix has {cols} columns",
                rows[bad].len()
            ));
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from strings of `0`/`1`, one per row.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<BitVector> = rows
            .iter()
            .map(|r| {
                BitVector::parse_bits(r)
                    .ok_or_else(|| Error::InputDomain(format!("not a bit string: {r:?}")))
            })
            .collect::<Result<_>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(cols, parsed)
    }

    /// Builds a matrix from per-row lists of set column indices.
    pub fn from_supports(cols: usize, supports: &[Vec<usize>]) -> Result<Self> {
        let rows = supports
            .iter()
            .map(|s| {
                check_index_set(s, cols, "column")?;
                Ok(BitVector::from_indices(cols, s.iter().copied()))
            })
            .collect::<Result<_>>()?;
        Ok(Self { cols, rows })
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.cols {
            return domain(format!(
                "row length {} does not match {} columns",
                row.len(),
                self.cols
            ));
        }
        self.rows.push(row);
        Ok(())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if other.cols != self.cols {
            return domain("column counts differ");
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self {
            cols: self.cols,
            rows,
        })
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_indices(
            self.nrows(),
            (0..self.nrows()).filter(|&r| self.rows[r].get(c)),
        )
    }

    /// Column-major view: one vector of length `nrows` per column.
    pub fn columns(&self) -> Vec<BitVector> {
        let mut cols = vec![BitVector::zeros(self.nrows()); self.cols];
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                cols[c].set(r, true);
            }
        }
        cols
    }

    pub fn transpose(&self) -> BitMatrix {
        Self {
            cols: self.nrows(),
            rows: self.columns(),
        }
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(BitVector::weight).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for row in &self.rows {
            for c in row.ones() {
                w[c] += 1;
            }
        }
        w
    }

    /// Per-row supports (sorted column indices).
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.ones().collect()).collect()
    }

    /// `self · vᵀ`, one bit per row.
    pub fn syndrome(&self, v: &BitVector) -> BitVector {
        BitVector::from_indices(
            self.nrows(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(v))
                .map(|(i, _)| i),
        )
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.rows {
            basis.insert(row.clone());
        }
        basis.rank()
    }

    /// Reduced row echelon form of the row space: nonzero rows plus their
    /// pivot columns, pivots ascending.
    pub fn rref(&self) -> (Vec<BitVector>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    *row ^= &pivot_row;
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    /// Basis of the null space `{x : self·xᵀ = 0}`, one free column per row.
    pub fn dual_basis(&self) -> BitMatrix {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVector::zeros(self.cols);
                x.set(f, true);
                for (row, &p) in rref.iter().zip(&pivots) {
                    if row.get(f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect();
        Self {
            cols: self.cols,
            rows,
        }
    }

    /// Submatrix on the given columns, in the given order.
    pub fn restriction(&self, cols: &[usize]) -> Result<BitMatrix> {
        check_index_set(cols, self.cols, "column")?;
        let rows = self
            .rows
            .iter()
            .map(|row| BitVector::from_indices(cols.len(), (0..cols.len()).filter(|&j| row.get(cols[j]))))
            .collect();
        Ok(Self {
            cols: cols.len(),
            rows,
        })
    }

    /// Counts rows with odd weight inside the restriction to `cols`.
    pub fn odd_row_profile(&self, cols: &[usize]) -> Result<OddRowProfile> {
        check_index_set(cols, self.cols, "column")?;
        let mask = BitVector::from_indices(self.cols, cols.iter().copied());
        let mut odd_rows = Vec::new();
        let mut max_row_weight = 0;
        for (i, row) in self.rows.iter().enumerate() {
            let w: u32 = row
                .words()
                .iter()
                .zip(mask.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            max_row_weight = max_row_weight.max(w as usize);
            if w & 1 == 1 {
                odd_rows.push(i);
            }
        }
        Ok(OddRowProfile {
            b: odd_rows.len(),
            odd_rows,
            max_row_weight,
        })
    }

    /// XOR of the selected rows.
    pub fn combine_rows(&self, row_indices: &[usize]) -> Result<BitVector> {
        if row_indices.is_empty() {
            return domain("row combination needs at least one row");
        }
        check_index_set(row_indices, self.nrows(), "row")?;
        let mut acc = BitVector::zeros(self.cols);
        for &i in row_indices {
            acc ^= &self.rows[i];
        }
        Ok(acc)
    }

    /// XOR of a uniformly random subset of this matrix's rows.
    ///
    /// With linearly independent rows this is a uniform draw from the row
    /// space; the zero vector is a legal outcome.
    pub fn sample_span<R: Rng + ?Sized>(&self, rng: &mut R) -> BitVector {
        let mut acc = BitVector::zeros(self.cols);
        for row in &self.rows {
            if rng.random::<bool>() {
                acc ^= row;
            }
        }
        acc
    }

    /// Appends rows of `basis`, greedily in basis order, until the rank
    /// reaches `rank(basis)`. Fails if a row of `self` lies outside the span.
    pub fn extend_to_full_rank(&self, basis: &BitMatrix) -> Result<Extension> {
        if basis.cols != self.cols {
            return domain("basis column count differs");
        }
        let mut span = EchelonBasis::new(self.cols);
        for row in &basis.rows {
            span.insert(row.clone());
        }
        if let Some(bad) = self.rows.iter().position(|r| !span.contains(r)) {
            return Err(Error::Inconsistent(format!(
                "row {bad} is not in the span of the basis"
            )));
        }
        let target = span.rank();
        let mut current = EchelonBasis::new(self.cols);
        for row in &self.rows {
            current.insert(row.clone());
        }
        let mut out = self.clone();
        let mut appended = 0;
        for row in &basis.rows {
            if current.rank() == target {
                break;
            }
            if current.insert(row.clone()) {
                out.rows.push(row.clone());
                appended += 1;
            }
        }
        Ok(Extension {
            matrix: out,
            appended,
        })
    }

    /// Length of the shortest cycle of the Tanner graph, `None` if acyclic.
    pub fn tanner_girth(&self) -> Option<usize> {
        let n = self.cols;
        let supports = self.supports();
        let mut var_checks = vec![Vec::new(); n];
        for (c, s) in supports.iter().enumerate() {
            for &v in s {
                var_checks[v].push(c);
            }
        }
        let total = n + supports.len();
        let neighbours = |u: usize| -> &[usize] {
            if u < n {
                &var_checks[u]
            } else {
                &supports[u - n]
            }
        };
        let offset = |u: usize, w: usize| if u < n { w + n } else { w };
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        let mut queue = VecDeque::new();
        // Every cycle passes through a check node.
        for root in n..total {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in neighbours(u) {
                    let w = offset(u, w);
                    if w == parent[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows(), self.cols)?;
        if self.nrows() <= 32 && self.cols <= 128 {
            write!(f, "{self}")?;
        }
        Ok(())
    }
}

/// Incrementally grown row-echelon basis; rows kept sorted by pivot.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<(usize, BitVector)>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: BitVector) -> BitVector {
        for (p, row) in &self.rows {
            if v.get(*p) {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the basis; returns whether the rank grew.
    pub fn insert(&mut self, v: BitVector) -> bool {
        let v = self.reduce(v);
        match v.first_one() {
            None => false,
            Some(p) => {
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, v));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hamming_h() -> BitMatrix {
        BitMatrix::parse_rows(&["0001111", "0110011", "1010101"]).unwrap()
    }

    fn hamming_g() -> BitMatrix {
        // Systematic generator orthogonal to `hamming_h`.
        BitMatrix::parse_rows(&["1110000", "1001100", "0101010", "1101001"]).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(hamming_h().rank(), 3);
    }

    #[test]
    fn generator_is_orthogonal_to_check() {
        let g = hamming_g();
        let h = hamming_h();
        for row in g.rows() {
            assert!(h.syndrome(row).is_zero());
        }
        assert_eq!(g.rank(), 4);
    }

    #[test]
    fn dual_of_generator_matches_check_space() {
        let d = hamming_g().dual_basis();
        assert_eq!((d.nrows(), d.ncols()), (3, 7));
        assert_eq!(d.rank(), 3);
        for row in d.rows() {
            assert!(hamming_g().syndrome(row).is_zero());
        }
        assert_eq!(d.vstack(&hamming_h()).unwrap().rank(), 3);
    }

    #[test]
    fn dual_of_identity_is_empty() {
        let d = BitMatrix::identity(5).dual_basis();
        assert_eq!((d.nrows(), d.ncols()), (0, 5));
    }

    #[test]
    fn dual_of_single_row() {
        let m = BitMatrix::parse_rows(&["1100"]).unwrap();
        let d = m.dual_basis();
        assert_eq!((d.nrows(), d.ncols()), (3, 4));
        // Span of the basis = the 8 vectors with even overlap on {0, 1}.
        let mut span = std::collections::BTreeSet::new();
        for mask in 0u32..8 {
            let sel: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            let v = if sel.is_empty() {
                BitVector::zeros(4)
            } else {
                d.combine_rows(&sel).unwrap()
            };
            assert!(!v.dot(m.row(0)));
            span.insert(v);
        }
        assert_eq!(span.len(), 8);
    }

    #[test]
    fn restriction_examples() {
        let h = hamming_h();
        let all: Vec<usize> = (0..7).collect();
        assert_eq!(h.restriction(&all).unwrap(), h);
        // Column 6 holds the binary representation of 7.
        let r = h.restriction(&[6]).unwrap();
        assert_eq!((r.nrows(), r.ncols()), (3, 1));
        assert_eq!(r.column_weights(), vec![3]);
        assert!(h.restriction(&[1, 1]).is_err());
        assert!(h.restriction(&[7]).is_err());
    }

    #[test]
    fn odd_profile_on_even_rows() {
        let m = BitMatrix::parse_rows(&["1100", "0110", "1111"]).unwrap();
        let p = m.odd_row_profile(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p.b, 0);
        assert_eq!(p.max_row_weight, 4);
        let p = m.odd_row_profile(&[1]).unwrap();
        assert_eq!((p.b, p.odd_rows.clone()), (3, vec![0, 1, 2]));
    }

    #[test]
    fn combine_rows_cases() {
        let h = hamming_h();
        assert_eq!(&h.combine_rows(&[1]).unwrap(), h.row(1));
        let twice = BitMatrix::from_rows(7, vec![h.row(0).clone(), h.row(0).clone()]).unwrap();
        assert!(twice.combine_rows(&[0, 1]).unwrap().is_zero());
        assert!(h.combine_rows(&[]).is_err());
        assert!(h.combine_rows(&[0, 0]).is_err());
    }

    #[test]
    fn extension_cases() {
        let h = hamming_h();
        let e = h.extend_to_full_rank(&h).unwrap();
        assert_eq!((e.appended, e.matrix.clone()), (0, h.clone()));

        let one = BitMatrix::from_rows(7, vec![h.combine_rows(&[0, 2]).unwrap()]).unwrap();
        let e = one.extend_to_full_rank(&h).unwrap();
        assert_eq!(e.appended, 2);
        assert_eq!(e.matrix.rank(), 3);
        assert_eq!(e.matrix.row(0), one.row(0));

        let outside = BitMatrix::parse_rows(&["1000000"]).unwrap();
        assert!(matches!(
            outside.extend_to_full_rank(&h),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn samples_lie_in_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = hamming_g();
        let h = hamming_h();
        for _ in 0..100 {
            let v = h.sample_span(&mut rng);
            assert!(g.syndrome(&v).is_zero());
        }
    }

    #[test]
    fn girth_of_small_graphs() {
        // 4-cycle: two checks sharing two variables.
        let m = BitMatrix::parse_rows(&["110", "111"]).unwrap();
        assert_eq!(m.tanner_girth(), Some(4));
        assert_eq!(BitMatrix::identity(3).tanner_girth(), None);
        // Fano incidence has no 4-cycles; triangles give 6-cycles.
        let fano = BitMatrix::from_supports(
            7,
            &[
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(fano.tanner_girth(), Some(6));
    }
}
