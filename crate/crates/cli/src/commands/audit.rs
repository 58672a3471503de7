use serde::Serialize;
use trapredund::geometry::{enumerate_arcs, unisecants_closed_form, ProjectiveGeometry, DEFAULT_ARC_BUDGET};
use trapredund::trapping::{exhaustive_min_b, measure, SearchOutcome};

use crate::args::{AuditArgs, Global};
use crate::error::CliError;
use crate::output::{csv_table, join, report, Meta};
use crate::source::{load, parse_pg};

#[derive(Debug, Serialize)]
struct AuditRow {
    a: usize,
    elementary_only: bool,
    min_b: Option<usize>,
    witness: String,
    subsets_scanned: String,
}

#[derive(Debug, Serialize)]
struct ArcRow {
    s: usize,
    arcs: usize,
    /// s(q+2-s) in the plane.
    expected_b: u64,
    /// Arcs whose columns measured exactly `expected_b` odd rows.
    matching: usize,
    /// Minimum b of the scan at a = s, when it was run.
    scan_min_b: Option<usize>,
}

#[derive(Serialize)]
struct Output<'a> {
    scans: &'a [SearchOutcome],
    arcs: Option<&'a [ArcRow]>,
}

/// `3..6` (inclusive) or `3,4,6`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad size list {s:?}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

pub fn run(global: &Global, args: &AuditArgs) -> Result<(), CliError> {
    let src = load(&args.source)?;
    let sizes = parse_sizes(&args.a)?;
    let mut scans = Vec::new();
    for &a in &sizes {
        scans.push(exhaustive_min_b(&src.h, a, args.elementary, args.budget)?);
    }
    let rows: Vec<AuditRow> = scans
        .iter()
        .map(|s| AuditRow {
            a: s.a,
            elementary_only: s.elementary_only,
            min_b: s.min_b,
            witness: s.witness.as_ref().map(|w| join(&w.columns)).unwrap_or_default(),
            subsets_scanned: s.subsets_scanned.to_string(),
        })
        .collect();

    let arc_rows = if args.arcs {
        let (dim, q) = match (&args.pg, src.pg) {
            (Some(s), _) => parse_pg(s)?,
            (None, Some(pg)) => pg,
            (None, None) => return Err(CliError::Usage("--arcs needs a pg:M:Q source or --pg M:Q".into())),
        };
        if dim != 2 {
            return Err(CliError::Usage("--arcs supports planes (M = 2) only".into()));
        }
        let geo = ProjectiveGeometry::new(dim, q)?;
        if geo.incidence_matrix() != src.h {
            return Err(CliError::Usage(format!("input is not the PG({dim},{q}) incidence matrix")));
        }
        let mut out = Vec::new();
        for &s in &sizes {
            if s as u64 > q as u64 + 2 {
                continue;
            }
            let arcs = enumerate_arcs(&geo, s, usize::MAX, DEFAULT_ARC_BUDGET)?;
            let expected_b = unisecants_closed_form(dim, q as u64, s as u64);
            let mut matching = 0;
            for arc in &arcs.arcs {
                if measure(&src.h, &arc.points)?.b as u64 == expected_b {
                    matching += 1;
                }
            }
            out.push(ArcRow {
                s,
                arcs: arcs.arcs.len(),
                expected_b,
                matching,
                scan_min_b: scans.iter().find(|x| x.a == s).and_then(|x| x.min_b),
            });
        }
        Some(out)
    } else {
        None
    };

    let meta = Meta::new("audit", global, args, vec![src.digest.clone()]);
    let mut tables = vec![("audit", csv_table(&rows)?)];
    if let Some(a) = &arc_rows {
        tables.push(("arcs", csv_table(a)?));
    }
    let out = Output {
        scans: &scans,
        arcs: arc_rows.as_deref(),
    };
    report(global, &meta, &tables, &out)
}
