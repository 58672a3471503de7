//! Report envelopes and writers.
//!
//! Every artifact carries the tool version, the resolved configuration, the
//! seed and the input digests. JSON puts them in the top-level object; CSV
//! puts them in leading `#` lines.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::args::{Format, Global};
use crate::error::{io_err, CliError};
use crate::source::InputDigest;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: serde_json::Value,
    pub seed: u64,
    pub inputs: Vec<InputDigest>,
}

impl Meta {
    pub fn new(command: &'static str, global: &Global, args: &impl Serialize, inputs: Vec<InputDigest>) -> Self {
        let config = serde_json::json!({ "global": global, "args": args });
        Meta {
            tool: "trapredund",
            version: VERSION,
            command,
            config,
            seed: global.seed,
            inputs,
        }
    }

    fn csv_header(&self) -> String {
        let mut s = format!("# {} {}\n# command: {}\n", self.tool, self.version, self.command);
        s += &format!("# config: {}\n# seed: {}\n", self.config, self.seed);
        for i in &self.inputs {
            s += &format!("# input: {} sha256={}\n", i.source, i.sha256);
        }
        s
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    #[serde(flatten)]
    meta: &'a Meta,
    result: &'a T,
}

pub fn json_report<T: Serialize>(meta: &Meta, result: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope { meta, result }).expect("serializable");
    s.push('\n');
    s
}

/// CSV text of `rows` without a header block.
pub fn csv_table<R: Serialize>(rows: &[R]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is UTF-8"))
}

/// Main report: CSV tables (titled when there are several) or one JSON
/// document.
pub fn report<T: Serialize>(global: &Global, meta: &Meta, tables: &[(&str, String)], result: &T) -> Result<(), CliError> {
    let text = match global.format {
        Format::Json => json_report(meta, result),
        Format::Csv => {
            let mut s = meta.csv_header();
            for (i, (title, body)) in tables.iter().enumerate() {
                if tables.len() > 1 {
                    if i > 0 {
                        s.push('\n');
                    }
                    s += &format!("# table: {title}\n");
                }
                s += body;
            }
            s
        }
    };
    emit(global.output.as_deref(), &text)
}

pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

pub fn with_json_extension(p: &Path) -> std::path::PathBuf {
    p.with_extension("json")
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
