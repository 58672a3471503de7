//! Matrix inputs: alist files or builtin constructions.

use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use trapredund::codes::{build_margulis, build_pg_code, code_from_alist, golay24, hamming7, repetition, LinearCode};
use trapredund::gf2::{alist, BitMatrix};
use trapredund::trapping::table4_fixture;

use crate::error::{io_err, CliError};

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

pub struct Source {
    pub h: BitMatrix,
    /// Absent for the synthetic fixtures.
    pub code: Option<LinearCode>,
    /// `(dim, q)` when the matrix is a PG incidence matrix.
    pub pg: Option<(u32, u32)>,
    pub digest: InputDigest,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("bad {what} {s:?}")))
}

/// Parses `M:Q`.
pub fn parse_pg(s: &str) -> Result<(u32, u32), CliError> {
    let (m, q) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("expected M:Q, got {s:?}")))?;
    Ok((parse_num(m, "dimension")?, parse_num(q, "field order")?))
}

type Builtin = (LinearCode, Option<(u32, u32)>);

fn builtin(name_or_path: &str) -> Result<Option<Builtin>, CliError> {
    let (name, rest) = name_or_path.split_once(':').unwrap_or((name_or_path, ""));
    let code = match name {
        "golay24" => golay24(),
        "hamming7" => hamming7(),
        "repetition" => repetition(parse_num(rest, "length")?)?,
        "margulis" => build_margulis(if rest.is_empty() { 11 } else { parse_num(rest, "prime")? })?,
        "pg" => {
            let pg = parse_pg(rest)?;
            return Ok(Some((build_pg_code(pg.0, pg.1)?, Some(pg))));
        }
        _ => return Ok(None),
    };
    Ok(Some((code, None)))
}

pub fn load(name_or_path: &str) -> Result<Source, CliError> {
    if let Some(config_b) = match name_or_path {
        "table4a" => Some(false),
        "table4b" => Some(true),
        _ => None,
    } {
        let h = table4_fixture(config_b).h;
        let text = alist::serialize(&h);
        return Ok(Source {
            h,
            code: None,
            pg: None,
            digest: InputDigest {
                source: name_or_path.into(),
                sha256: sha256_hex(text.as_bytes()),
            },
        });
    }
    if let Some((code, pg)) = builtin(name_or_path)? {
        let text = alist::serialize(&code.h);
        return Ok(Source {
            h: code.h.clone(),
            code: Some(code),
            pg,
            digest: InputDigest {
                source: name_or_path.into(),
                sha256: sha256_hex(text.as_bytes()),
            },
        });
    }
    let path = Path::new(name_or_path);
    let bytes = std::fs::read(path).map_err(|e| io_err(path, e))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Io(format!("{}: not UTF-8 text", path.display())))?;
    let code = code_from_alist(&text, None)?;
    Ok(Source {
        h: code.h.clone(),
        code: Some(code),
        pg: None,
        digest: InputDigest {
            source: name_or_path.into(),
            sha256: sha256_hex(&bytes),
        },
    })
}
