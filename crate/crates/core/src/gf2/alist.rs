//! Reader and writer for the alist sparse-matrix text format.
//!
//! Layout: `n m`, then the maximum column and row degrees, the per-column and
//! per-row degree lists, one line of 1-based row indices per column, and one
//! line of 1-based column indices per row. The writer pads index lines with
//! `0` up to the maximum degree; the reader accepts padded and unpadded files.

use std::fmt::Write as _;

use super::{BitMatrix, BitVector};
use crate::error::{Error, Result};

pub fn serialize(m: &BitMatrix) -> String {
    let supports = m.supports();
    let mut col_lists = vec![Vec::new(); m.ncols()];
    for (r, s) in supports.iter().enumerate() {
        for &c in s {
            col_lists[c].push(r);
        }
    }
    let max_col = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = supports.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.ncols(), m.nrows());
    let _ = writeln!(out, "{max_col} {max_row}");
    push_joined(&mut out, col_lists.iter().map(Vec::len));
    push_joined(&mut out, supports.iter().map(Vec::len));
    for list in &col_lists {
        push_padded(&mut out, list, max_col);
    }
    for list in &supports {
        push_padded(&mut out, list, max_row);
    }
    out
}

fn push_joined(out: &mut String, items: impl Iterator<Item = usize>) {
    let line: Vec<String> = items.map(|x| x.to_string()).collect();
    out.push_str(&line.join(" "));
    out.push('\n');
}

fn push_padded(out: &mut String, list: &[usize], width: usize) {
    push_joined(
        out,
        list.iter()
            .map(|i| i + 1)
            .chain(std::iter::repeat_n(0, width - list.len())),
    );
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next line, optionally skipping blank ones; returns (1-based number, text).
    fn next_line(&mut self, skip_blank: bool) -> Result<(usize, &'a str)> {
        loop {
            match self.inner.next() {
                None => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: "unexpected end of input".into(),
                    })
                }
                Some((_, l)) if skip_blank && l.trim().is_empty() => continue,
                Some((i, l)) => return Ok((i + 1, l)),
            }
        }
    }

    fn numbers(&mut self, skip_blank: bool) -> Result<(usize, Vec<usize>)> {
        let (no, text) = self.next_line(skip_blank)?;
        let nums = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: no,
                    msg: format!("not a non-negative integer: {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((no, nums))
    }
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

pub fn parse(text: &str) -> Result<BitMatrix> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
    };
    let (no, header) = lines.numbers(true)?;
    let [n, m] = header[..] else {
        return parse_err(no, "header must be `n m`");
    };
    let (no, maxes) = lines.numbers(true)?;
    let [max_col, max_row] = maxes[..] else {
        return parse_err(no, "second line must hold the two maximum degrees");
    };
    let (no, col_deg) = lines.numbers(true)?;
    if col_deg.len() != n {
        return parse_err(no, format!("expected {n} column degrees, got {}", col_deg.len()));
    }
    if col_deg.iter().any(|&d| d > max_col) {
        return parse_err(no, "column degree exceeds the declared maximum");
    }
    let (no, row_deg) = lines.numbers(m > 0)?;
    if row_deg.len() != m {
        return parse_err(no, format!("expected {m} row degrees, got {}", row_deg.len()));
    }
    if row_deg.iter().any(|&d| d > max_row) {
        return parse_err(no, "row degree exceeds the declared maximum");
    }

    let read_lists = |lines: &mut Lines<'_>, degs: &[usize], bound: usize, what: &str| {
        let mut lists = Vec::with_capacity(degs.len());
        for (i, &d) in degs.iter().enumerate() {
            let (no, nums) = lines.numbers(d > 0)?;
            let idx: Vec<usize> = nums.into_iter().filter(|&x| x != 0).collect();
            if idx.len() != d {
                return parse_err(
                    no,
                    format!("{what} {} declares degree {d} but lists {}", i + 1, idx.len()),
                );
            }
            if let Some(&bad) = idx.iter().find(|&&x| x > bound) {
                return parse_err(no, format!("index {bad} out of range 1..={bound}"));
            }
            lists.push((no, idx));
        }
        Ok(lists)
    };
    let col_lists = read_lists(&mut lines, &col_deg, m, "column")?;
    let row_lists = read_lists(&mut lines, &row_deg, n, "row")?;

    let mut rows = vec![BitVector::zeros(n); m];
    for (r, (no, list)) in row_lists.iter().enumerate() {
        for &c in list {
            if rows[r].get(c - 1) {
                return parse_err(*no, format!("duplicate column index {c}"));
            }
            rows[r].set(c - 1, true);
        }
    }
    for (c, (no, list)) in col_lists.iter().enumerate() {
        for &r in list {
            if !rows[r - 1].get(c) {
                return parse_err(
                    *no,
                    format!("column {} lists row {r}, but that row omits it", c + 1),
                );
            }
        }
    }
    let matrix = BitMatrix::from_rows(n, rows)?;
    if matrix.column_weights() != col_deg {
        return parse_err(0, "column lists disagree with row lists");
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hamming_h() -> BitMatrix {
        BitMatrix::parse_rows(&["0001111", "0110011", "1010101"]).unwrap()
    }

    #[test]
    fn hamming_layout() {
        let text = serialize(&hamming_h());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "7 3");
        assert_eq!(lines[1], "3 4");
        assert_eq!(lines[2], "1 1 2 1 2 2 3");
        assert_eq!(lines[3], "4 4 4");
        assert_eq!(lines[4], "3 0 0");
        assert_eq!(lines[10], "1 2 3");
        assert_eq!(lines[11], "4 5 6 7");
        assert_eq!(parse(&text).unwrap(), hamming_h());
    }

    #[test]
    fn unpadded_input_is_accepted() {
        let text = "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n";
        let m = parse(text).unwrap();
        assert_eq!(m, BitMatrix::parse_rows(&["110", "011"]).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_index = "2 1\n1 2\n1 1\n2\n1\n1\n1 3\n";
        match parse(bad_index) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 7),
            other => panic!("unexpected {other:?}"),
        }
        let bad_degree = "2 1\n1 2\n1 1\n2\n0\n1\n1 2\n";
        assert!(matches!(parse(bad_degree), Err(Error::Parse { line: 5, .. })));
        assert!(matches!(parse("x y\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse("").is_err());
    }

    #[test]
    fn inconsistent_lists_rejected() {
        // Column 1 claims row 1, but row 1 lists only column 2.
        let text = "2 1\n1 1\n1 0\n1\n1\n0\n2\n";
        assert!(parse(text).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
        (0usize..8, 1usize..12).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
                .prop_map(move |rows| {
                    let rows = rows.iter().map(|b| BitVector::from_bools(b)).collect();
                    BitMatrix::from_rows(c, rows).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(m in arb_matrix()) {
            let text = serialize(&m);
            let back = parse(&text).unwrap();
            prop_assert_eq!(&back, &m);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
