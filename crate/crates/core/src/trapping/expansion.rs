//! Extending an elementary (12,4) set of a column-weight-3 code to a (14,4)
//! set, and the redundant rows that break both.
//!
//! Labels: `B` is the basic (12,4) set, `E` the two expansion columns, `O`
//! everything outside. `c_BE` are the degree-one checks of `B` met by `E`,
//! `c_BO` the other two, `c_E` the check shared by both expansion columns and
//! `c_EO` their checks that lead outside.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{measure, TrappingSetReport};
use crate::error::{domain, Result};
use crate::gf2::BitMatrix;

pub const BASIC_A: usize = 12;
pub const BASIC_B: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpansionConfig {
    /// The expansion columns share a check.
    A,
    /// One outside column meets two degree-one checks.
    B,
    Unclassified,
}

#[derive(Debug, Clone, Serialize)]
pub struct Combo {
    pub method: &'static str,
    pub labels: Vec<&'static str>,
    pub rows: Vec<usize>,
    pub full_weight: usize,
    /// Restriction weight on the basic set.
    pub weight_on_basic: usize,
    /// Restriction weight on the expanded set, when known.
    pub weight_on_expanded: Option<usize>,
    /// Restriction weight on the expansion columns alone, when known.
    pub weight_on_expansion: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Expansion {
    pub config: ExpansionConfig,
    pub basic: TrappingSetReport,
    pub expanded: Option<TrappingSetReport>,
    /// Label to check (row) index.
    pub checks: BTreeMap<&'static str, usize>,
    /// Label to variable (column) index.
    pub variables: BTreeMap<&'static str, usize>,
    /// Other outside columns that would also fit in configuration b.
    pub alternatives: usize,
    pub s1: Vec<Combo>,
    pub s2: Vec<Combo>,
    pub s3: Vec<Combo>,
}

impl Expansion {
    pub fn all_combos(&self) -> impl Iterator<Item = &Combo> {
        self.s1.iter().chain(&self.s2).chain(&self.s3)
    }
}

type Recipe = (&'static str, &'static [&'static str]);

const CONFIG_A: &[Recipe] = &[
    ("S1", &["c_E", "c_EO1", "c_BE2"]),
    ("S1", &["c_E", "c_EO2", "c_BE1"]),
    ("S1", &["c_EO1", "c_BE1"]),
    ("S1", &["c_EO2", "c_BE2"]),
    ("S2", &["c_E", "c_EO1"]),
    ("S2", &["c_E", "c_EO2"]),
    ("S3", &["c_E", "c_BO1"]),
    ("S3", &["c_E", "c_BO2"]),
    ("S3", &["c_E", "c_BE1", "c_BE2", "c_BO1"]),
    ("S3", &["c_E", "c_BE1", "c_BE2", "c_BO2"]),
    ("S3", &["c_BO1", "c_BO2", "c_EO1", "c_BE2"]),
    ("S3", &["c_BO1", "c_BO2", "c_EO2", "c_BE1"]),
];

const CONFIG_B: &[Recipe] = &[("S1", &["c_EO1", "c_BE1"]), ("S1", &["c_EO1", "c_BE2"])];

struct Graph {
    col_checks: Vec<Vec<usize>>,
    row_vars: Vec<Vec<usize>>,
}

impl Graph {
    fn new(h: &BitMatrix) -> Self {
        let row_vars = h.supports();
        let mut col_checks = vec![Vec::new(); h.ncols()];
        for (r, s) in row_vars.iter().enumerate() {
            for &c in s {
                col_checks[c].push(r);
            }
        }
        Self { col_checks, row_vars }
    }
}

fn weight_on(h: &BitMatrix, rows: &[usize], cols: &[usize]) -> usize {
    let v = h.combine_rows(rows).expect("valid rows");
    cols.iter().filter(|&&c| v.get(c)).count()
}

/// Classifies how `basic_columns` extends and lists the candidate rows.
///
/// `degree_one_checks`, when given, must be exactly the odd rows of the basic
/// set. The columns of the basic set and of any expansion column must have
/// weight 3.
pub fn margulis_expansion(
    h: &BitMatrix,
    basic_columns: &[usize],
    degree_one_checks: Option<&[usize]>,
) -> Result<Expansion> {
    let basic = measure(h, basic_columns)?;
    if basic.a != BASIC_A || basic.b != BASIC_B || !basic.elementary {
        return domain(format!(
            "basic set must be an elementary ({BASIC_A},{BASIC_B}) set, measured ({}, {}) elementary = {}",
            basic.a, basic.b, basic.elementary
        ));
    }
    if let Some(d1) = degree_one_checks {
        let mut d1 = d1.to_vec();
        d1.sort_unstable();
        if d1 != basic.odd_rows {
            return domain(format!("degree-one checks {d1:?} differ from the odd rows {:?}", basic.odd_rows));
        }
    }
    let g = Graph::new(h);
    if let Some(&c) = basic.columns.iter().find(|&&c| g.col_checks[c].len() != 3) {
        return domain(format!("column {c} has weight {}, expected 3", g.col_checks[c].len()));
    }
    let in_basic = |v: usize| basic.columns.binary_search(&v).is_ok();
    let deg1 = basic.odd_rows.clone();
    let basic_var = |c: usize| *g.row_vars[c].iter().find(|&&v| in_basic(v)).unwrap();
    let outside = |c: usize| g.row_vars[c].iter().copied().filter(move |&v| !in_basic(v));

    // Configuration a.
    for (i, &c1) in deg1.iter().enumerate() {
        for &c2 in &deg1[i + 1..] {
            for v1 in outside(c1) {
                for v2 in outside(c2) {
                    if v1 == v2 || g.col_checks[v1].len() != 3 || g.col_checks[v2].len() != 3 {
                        continue;
                    }
                    let shared: Vec<usize> = g.col_checks[v1]
                        .iter()
                        .copied()
                        .filter(|c| g.col_checks[v2].contains(c) && !deg1.contains(c))
                        .collect();
                    let [ce] = shared[..] else { continue };
                    let mut cols = basic.columns.clone();
                    cols.extend([v1, v2]);
                    let expanded = measure(h, &cols)?;
                    if !(expanded.elementary && expanded.b == BASIC_B) {
                        continue;
                    }
                    let other = |v: usize, cbe: usize| -> Option<usize> {
                        let rest: Vec<usize> =
                            g.col_checks[v].iter().copied().filter(|&c| c != ce && c != cbe).collect();
                        (rest.len() == 1).then(|| rest[0])
                    };
                    let (Some(ceo1), Some(ceo2)) = (other(v1, c1), other(v2, c2)) else {
                        continue;
                    };
                    let bo: Vec<usize> = deg1.iter().copied().filter(|&c| c != c1 && c != c2).collect();
                    let checks = BTreeMap::from([
                        ("c_E", ce),
                        ("c_EO1", ceo1),
                        ("c_EO2", ceo2),
                        ("c_BE1", c1),
                        ("c_BE2", c2),
                        ("c_BO1", bo[0]),
                        ("c_BO2", bo[1]),
                    ]);
                    let variables = BTreeMap::from([
                        ("v_E1", v1),
                        ("v_E2", v2),
                        ("v_BE1", basic_var(c1)),
                        ("v_BE2", basic_var(c2)),
                        ("v_BO1", basic_var(bo[0])),
                        ("v_BO2", basic_var(bo[1])),
                    ]);
                    return Ok(build(h, ExpansionConfig::A, basic, Some(expanded), checks, variables, 0, &[v1, v2]));
                }
            }
        }
    }

    // Configuration b: an outside column on two degree-one checks.
    let mut fits = Vec::new();
    for &c in &deg1 {
        for v in outside(c) {
            let hits: Vec<usize> = g.col_checks[v].iter().copied().filter(|c| deg1.contains(c)).collect();
            if hits.len() == 2 && g.col_checks[v].len() == 3 && !fits.iter().any(|(u, _)| *u == v) {
                fits.push((v, hits));
            }
        }
    }
    fits.sort();
    if let Some((v, hits)) = fits.first().cloned() {
        let ceo1 = *g.col_checks[v].iter().find(|c| !hits.contains(c)).unwrap();
        let checks = BTreeMap::from([("c_EO1", ceo1), ("c_BE1", hits[0]), ("c_BE2", hits[1])]);
        let variables = BTreeMap::from([
            ("v_E1", v),
            ("v_BE1", basic_var(hits[0])),
            ("v_BE2", basic_var(hits[1])),
        ]);
        return Ok(build(h, ExpansionConfig::B, basic, None, checks, variables, fits.len() - 1, &[v]));
    }

    Ok(Expansion {
        config: ExpansionConfig::Unclassified,
        basic,
        expanded: None,
        checks: BTreeMap::new(),
        variables: BTreeMap::new(),
        alternatives: 0,
        s1: Vec::new(),
        s2: Vec::new(),
        s3: Vec::new(),
    })
}

#[allow(clippy::too_many_arguments)]
fn build(
    h: &BitMatrix,
    config: ExpansionConfig,
    basic: TrappingSetReport,
    expanded: Option<TrappingSetReport>,
    checks: BTreeMap<&'static str, usize>,
    variables: BTreeMap<&'static str, usize>,
    alternatives: usize,
    expansion_cols: &[usize],
) -> Expansion {
    let recipes = match config {
        ExpansionConfig::A => CONFIG_A,
        _ => CONFIG_B,
    };
    let (mut s1, mut s2, mut s3) = (Vec::new(), Vec::new(), Vec::new());
    for (method, labels) in recipes {
        let rows: Vec<usize> = labels.iter().map(|l| checks[l]).collect();
        let combo = Combo {
            method,
            labels: labels.to_vec(),
            full_weight: h.combine_rows(&rows).expect("valid rows").weight(),
            weight_on_basic: weight_on(h, &rows, &basic.columns),
            weight_on_expanded: expanded.as_ref().map(|e| weight_on(h, &rows, &e.columns)),
            weight_on_expansion: expanded.as_ref().map(|_| weight_on(h, &rows, expansion_cols)),
            rows,
        };
        match *method {
            "S1" => s1.push(combo),
            "S2" => s2.push(combo),
            _ => s3.push(combo),
        }
    }
    Expansion {
        config,
        basic,
        expanded,
        checks,
        variables,
        alternatives,
        s1,
        s2,
        s3,
    }
}

/// A small matrix wired like the restriction table of the nested sets, padded
/// so that every check has weight 6.
#[derive(Debug, Clone)]
pub struct Table4Fixture {
    pub h: BitMatrix,
    pub basic_columns: Vec<usize>,
    pub expansion_columns: Vec<usize>,
    pub degree_one_checks: Vec<usize>,
    /// Label to row index for the labelled checks.
    pub checks: BTreeMap<&'static str, usize>,
}

/// Basic set: the hexagonal prism (3-regular, triangle-free, 12 vertices)
/// with two opposite rungs removed; its 16 edges are checks of weight 2 and
/// the four vertices that lost a rung each get a degree-one check.
///
/// With `config_b` the expansion columns share no check: `v_E1` meets two
/// degree-one checks and `v_E2` the third.
pub fn table4_fixture(config_b: bool) -> Table4Fixture {
    const E1: usize = 12;
    const E2: usize = 13;
    let mut edges = Vec::new();
    for s in 0..2 {
        for i in 0..6 {
            edges.push(vec![i + 6 * s, (i + 1) % 6 + 6 * s]);
        }
    }
    for i in [1, 2, 4, 5] {
        edges.push(vec![i, i + 6]);
    }
    let (labels, mut supports): (Vec<&'static str>, Vec<Vec<usize>>) = if config_b {
        [
            ("c_EO1", vec![E1]),
            ("c_EO2", vec![E2]),
            ("c_EO3", vec![E2]),
            ("c_BE1", vec![0, E1]),
            ("c_BE2", vec![3, E1]),
            ("c_BE3", vec![6, E2]),
            ("c_BO1", vec![9]),
        ]
        .into_iter()
        .unzip()
    } else {
        [
            ("c_E", vec![E1, E2]),
            ("c_EO1", vec![E1]),
            ("c_EO2", vec![E2]),
            ("c_BE1", vec![0, E1]),
            ("c_BE2", vec![3, E2]),
            ("c_BO1", vec![6]),
            ("c_BO2", vec![9]),
        ]
        .into_iter()
        .unzip()
    };
    let degree_one_checks = vec![3, 4, 5, 6];
    supports.extend(edges);
    let mut next = 14;
    for s in &mut supports {
        while s.len() < 6 {
            s.push(next);
            next += 1;
        }
    }
    let h = BitMatrix::from_supports(next, &supports).expect("fixture is well formed");
    Table4Fixture {
        h,
        basic_columns: (0..12).collect(),
        expansion_columns: vec![E1, E2],
        degree_one_checks,
        checks: labels.into_iter().enumerate().map(|(i, l)| (l, i)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trapping::break_trapping_set;

    #[test]
    fn fixture_shapes() {
        for b in [false, true] {
            let fx = table4_fixture(b);
            let basic = measure(&fx.h, &fx.basic_columns).unwrap();
            assert_eq!((basic.a, basic.b, basic.elementary), (12, 4, true));
            let mut all = fx.basic_columns.clone();
            all.extend(&fx.expansion_columns);
            let big = measure(&fx.h, &all).unwrap();
            assert_eq!((big.a, big.b, big.elementary), (14, 4, true));
            assert!(fx.h.row_weights().iter().all(|&w| w == 6));
            let weights = fx.h.column_weights();
            assert!(all.iter().all(|&c| weights[c] == 3));
        }
    }

    #[test]
    fn labelled_columns_have_four_odd_checks() {
        // v_E1, v_E2, v_BE1, v_BE2, v_BO1, v_BO2 over the seven labelled checks.
        let fx = table4_fixture(false);
        let seven = fx.h.restriction(&[0, 3, 6, 9, 12, 13]).unwrap();
        let odd: Vec<usize> = (0..7).filter(|&r| seven.row(r).weight() % 2 == 1).collect();
        assert_eq!(odd, vec![1, 2, 5, 6]);
    }

    #[test]
    fn config_a_lists() {
        let fx = table4_fixture(false);
        let ex = margulis_expansion(&fx.h, &fx.basic_columns, Some(&fx.degree_one_checks)).unwrap();
        assert_eq!(ex.config, ExpansionConfig::A);
        assert_eq!((ex.s1.len(), ex.s2.len(), ex.s3.len()), (4, 2, 6));
        for (k, v) in &fx.checks {
            assert_eq!(ex.checks[k], *v, "{k}");
        }
        for c in &ex.s2 {
            assert_eq!(c.weight_on_expansion, Some(1));
            assert_eq!(c.weight_on_expanded.unwrap() % 2, 1);
        }
        for c in ex.s1.iter().chain(&ex.s3) {
            assert_eq!(c.weight_on_basic % 2, 1, "{:?}", c.labels);
            assert_eq!(c.weight_on_expanded.unwrap() % 2, 1, "{:?}", c.labels);
        }
        for c in &ex.s3 {
            assert!(c.full_weight % 2 == 0 && (10..=24).contains(&c.full_weight));
        }
    }

    #[test]
    fn config_b_lists() {
        let fx = table4_fixture(true);
        let ex = margulis_expansion(&fx.h, &fx.basic_columns, None).unwrap();
        assert_eq!(ex.config, ExpansionConfig::B);
        assert_eq!(ex.all_combos().count(), 2);
        assert_eq!(ex.s1[0].rows, vec![fx.checks["c_EO1"], fx.checks["c_BE1"]]);
        assert_eq!(ex.s1[1].rows, vec![fx.checks["c_EO1"], fx.checks["c_BE2"]]);
        assert!(ex.all_combos().all(|c| c.weight_on_basic % 2 == 1));
    }

    #[test]
    fn rejects_other_sets() {
        let fx = table4_fixture(false);
        assert!(margulis_expansion(&fx.h, &fx.basic_columns[..11], None).is_err());
        assert!(margulis_expansion(&fx.h, &fx.basic_columns, Some(&[0, 1, 2, 3])).is_err());
    }

    #[test]
    fn pair_sums_with_c_e_lead_the_size_two_candidates() {
        let fx = table4_fixture(false);
        let mut all = fx.basic_columns.clone();
        all.extend(&fx.expansion_columns);
        let res = break_trapping_set(&fx.h, &all, 2).unwrap();
        let pairs: Vec<&Vec<usize>> = res.candidates.iter().map(|c| &c.combo).filter(|c| c.len() == 2).collect();
        let e = fx.checks["c_E"];
        assert_eq!(pairs[0], &vec![e, fx.checks["c_EO1"]]);
        assert_eq!(pairs[1], &vec![e, fx.checks["c_EO2"]]);
    }
}
