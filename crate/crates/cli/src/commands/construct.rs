use serde::Serialize;
use trapredund::codes::{build_margulis, build_pg_code, golay24, hamming7, repetition, CodeDescriptor};
use trapredund::gf2::alist;

use crate::args::{CodeKind, ConstructArgs, Global};
use crate::error::CliError;
use crate::output::{emit, json_report, with_json_extension, Meta};
use crate::source::sha256_hex;

#[derive(Serialize)]
struct Output<'a> {
    descriptor: CodeDescriptor<'a>,
    columns: usize,
    column_weights: (usize, usize),
    row_weights: (usize, usize),
    girth: Option<usize>,
    alist_sha256: String,
}

fn range(xs: &[usize]) -> (usize, usize) {
    (
        xs.iter().copied().min().unwrap_or(0),
        xs.iter().copied().max().unwrap_or(0),
    )
}

pub fn run(global: &Global, args: &ConstructArgs) -> Result<(), CliError> {
    let code = match &args.code {
        CodeKind::Pg { m, q } => build_pg_code(*m, *q)?,
        CodeKind::Margulis { p } => build_margulis(*p)?,
        CodeKind::Golay24 => golay24(),
        CodeKind::Hamming7 => hamming7(),
        CodeKind::Repetition { n } => repetition(*n)?,
    };
    let text = alist::serialize(&code.h);
    let out = Output {
        descriptor: code.descriptor(),
        columns: code.h.ncols(),
        column_weights: range(&code.h.column_weights()),
        row_weights: range(&code.h.row_weights()),
        girth: code.h.tanner_girth(),
        alist_sha256: sha256_hex(text.as_bytes()),
    };
    emit(global.output.as_deref(), &text)?;
    let descriptor_path = args
        .descriptor
        .clone()
        .or_else(|| global.output.as_deref().map(with_json_extension));
    let meta = Meta::new("construct", global, args, Vec::new());
    let json = json_report(&meta, &out);
    match descriptor_path {
        Some(p) => emit(Some(&p), &json),
        None => {
            eprint!("{json}");
            Ok(())
        }
    }
}
