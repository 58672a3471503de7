use serde::Serialize;
use trapredund::bounds::{min_m, BoundQuery};
use trapredund::gf2::alist;
use trapredund::trapping::{sample_lll_matrix, SampleOutcome};

use crate::args::{Global, SampleArgs};
use crate::error::CliError;
use crate::output::{emit, json_report, with_json_extension, Meta};
use crate::source::{load, sha256_hex};

#[derive(Serialize)]
struct Output<'a> {
    m: usize,
    m_from_bound: bool,
    rows: Option<usize>,
    rank: Option<usize>,
    alist_sha256: Option<String>,
    outcome: &'a SampleOutcome,
}

pub fn run(global: &Global, args: &SampleArgs) -> Result<(), CliError> {
    let src = load(&args.source)?;
    let code = src
        .code
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} is not a code source", args.source)))?;
    let m = match args.m {
        Some(m) => m,
        None => {
            let mut q = BoundQuery::std(code.n as u64, code.k as u64, args.a as u64, args.b as u64);
            q.elementary = args.elementary;
            q.allow_any_a = true;
            min_m(&q)?.m as usize
        }
    };
    let outcome = sample_lll_matrix(
        code,
        m,
        args.a,
        args.b,
        args.elementary,
        args.max_attempts,
        global.seed,
        args.budget,
    )?;
    let text = outcome.matrix.as_ref().map(alist::serialize);
    let out = Output {
        m,
        m_from_bound: args.m.is_none(),
        rows: outcome.matrix.as_ref().map(|h| h.nrows()),
        rank: outcome.matrix.as_ref().map(|h| h.rank()),
        alist_sha256: text.as_ref().map(|t| sha256_hex(t.as_bytes())),
        outcome: &outcome,
    };
    if let Some(t) = &text {
        emit(global.output.as_deref(), t)?;
    }
    let meta = Meta::new("sample", global, args, vec![src.digest.clone()]);
    let json = json_report(&meta, &out);
    let report_path = args
        .report
        .clone()
        .or_else(|| global.output.as_deref().map(with_json_extension));
    match report_path {
        Some(p) => emit(Some(&p), &json)?,
        None => eprint!("{json}"),
    }
    if outcome.success {
        Ok(())
    } else {
        Err(CliError::Exhausted(format!(
            "no matrix after {} attempts (best min b {:?})",
            outcome.attempts, outcome.best_min_b
        )))
    }
}
