use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use trapredund::gf2::alist;
use trapredund::trapping::{break_trapping_set, margulis_expansion, measure, BreakResult, Expansion};

use crate::args::{BreakArgs, Global};
use crate::error::CliError;
use crate::output::{csv_table, emit, join, report, Meta};
use crate::source::load;

#[derive(Debug, Serialize)]
struct CandidateRow {
    position: usize,
    size: usize,
    combo: String,
    restriction_weight: usize,
    full_weight: usize,
}

#[derive(Debug, Serialize)]
struct ComboRow {
    method: &'static str,
    labels: String,
    rows: String,
    full_weight: usize,
    weight_on_basic: usize,
    weight_on_expanded: Option<usize>,
    weight_on_expansion: Option<usize>,
}

#[derive(Serialize)]
struct Output<'a> {
    columns: &'a [usize],
    b_before: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_after_append: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidates: Option<&'a BreakResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<&'a Expansion>,
}

pub fn run(global: &Global, args: &BreakArgs) -> Result<(), CliError> {
    let src = load(&args.source)?;
    let mut columns = match args.random {
        Some(a) => {
            if a == 0 || a > src.h.ncols() {
                return Err(CliError::Usage(format!("cannot pick {a} of {} columns", src.h.ncols())));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(global.seed);
            sample(&mut rng, src.h.ncols(), a).into_vec()
        }
        None if args.columns.is_empty() => return Err(CliError::Usage("give --columns or --random".into())),
        None => args.columns.clone(),
    };
    columns.sort_unstable();
    let before = measure(&src.h, &columns)?;
    let meta = Meta::new("break", global, args, vec![src.digest.clone()]);

    if args.expansion {
        let ex = margulis_expansion(&src.h, &columns, None)?;
        let rows: Vec<ComboRow> = ex
            .all_combos()
            .map(|c| ComboRow {
                method: c.method,
                labels: c.labels.join(" "),
                rows: join(&c.rows),
                full_weight: c.full_weight,
                weight_on_basic: c.weight_on_basic,
                weight_on_expanded: c.weight_on_expanded,
                weight_on_expansion: c.weight_on_expansion,
            })
            .collect();
        eprintln!("configuration: {:?}", ex.config);
        let out = Output {
            columns: &columns,
            b_before: before.b,
            b_after_append: None,
            candidates: None,
            expansion: Some(&ex),
        };
        return report(global, &meta, &[("expansion", csv_table(&rows)?)], &out);
    }

    let res = break_trapping_set(&src.h, &columns, args.max_combo)?;
    if let Some(note) = &res.note {
        eprintln!("note: {note}");
    }
    let rows: Vec<CandidateRow> = res
        .candidates
        .iter()
        .enumerate()
        .map(|(i, c)| CandidateRow {
            position: i,
            size: c.combo.len(),
            combo: join(&c.combo),
            restriction_weight: c.restriction_weight,
            full_weight: c.full_weight,
        })
        .collect();
    let mut after = None;
    if let Some(path) = &args.append_top {
        let top = res
            .candidates
            .first()
            .ok_or_else(|| CliError::Usage("no candidate to append".into()))?;
        let mut h = src.h.clone();
        h.push_row(top.row.clone())?;
        after = Some(measure(&h, &columns)?.b);
        emit(Some(path), &alist::serialize(&h))?;
    }
    let out = Output {
        columns: &columns,
        b_before: before.b,
        b_after_append: after,
        candidates: Some(&res),
        expansion: None,
    };
    report(global, &meta, &[("candidates", csv_table(&rows)?)], &out)
}
