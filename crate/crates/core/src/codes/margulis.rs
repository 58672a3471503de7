//! Margulis-type (3,6)-regular codes from SL2(F_p).
//!
//! Checks and each of two variable copies are indexed by the group. Check `g`
//! is joined to variable `g s` in copy 0 for `s` in `copy0`, and to `g s` in
//! copy 1 for `s` in `copy1`. The words are in the generators
//! `A = [[1,2],[0,1]]` and `B = [[1,0],[2,1]]`, with `a` and `b` for their
//! inverses.

use std::collections::HashMap;

use super::{Distance, LinearCode, Provenance};
use crate::error::{domain, Result};
use crate::gf2::BitMatrix;

type Mat = [u32; 4];

/// Right-multiplication words defining the adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MargulisRule {
    pub id: &'static str,
    pub copy0: [&'static str; 3],
    pub copy1: [&'static str; 3],
}

/// The rule used by [`build_margulis`]. For p = 11 it yields rank 1320,
/// girth 8 and many elementary (12,4) sets, e.g. columns
/// `[0, 9, 447, 991, 1099, 1207, 1302, 1329, 1762, 1767, 2066, 2527]`.
pub const MARGULIS_RULE: MargulisRule = MargulisRule {
    id: "sl2-right:{I,A,Ab}|{I,BA,bb}",
    copy0: ["I", "A", "Ab"],
    copy1: ["I", "BA", "bb"],
};

fn mul(x: &Mat, y: &Mat, p: u32) -> Mat {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

fn word(w: &str, p: u32) -> Result<Mat> {
    let a = [1, 2 % p, 0, 1];
    let b = [1, 0, 2 % p, 1];
    let ai = [1, p - 2 % p, 0, 1];
    let bi = [1, 0, p - 2 % p, 1];
    let mut acc = [1, 0, 0, 1];
    for ch in w.chars() {
        acc = match ch {
            'I' => acc,
            'A' => mul(&acc, &a, p),
            'B' => mul(&acc, &b, p),
            'a' => mul(&acc, &ai, p),
            'b' => mul(&acc, &bi, p),
            _ => return domain(format!("bad generator {ch:?} in word {w:?}")),
        };
    }
    Ok(acc)
}

/// Elements `[a, b, c, d]` of SL2(F_p) in lexicographic order.
pub fn sl2_elements(p: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p) % p == 1 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Parity-check matrix with `|SL2(F_p)| = p(p^2-1)` rows and twice as many
/// columns. `p = 11` gives the [2640, 1320] code.
pub fn build_margulis(p: u32) -> Result<LinearCode> {
    build_margulis_with(p, &MARGULIS_RULE)
}

/// As [`build_margulis`] with another adjacency rule.
pub fn build_margulis_with(p: u32, rule: &MargulisRule) -> Result<LinearCode> {
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    if !(5..=47).contains(&p) {
        return domain(format!("p = {p} outside the supported range 5..=47"));
    }
    let group = sl2_elements(p);
    let index: HashMap<Mat, usize> = group.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let order = group.len();
    let s0 = rule.copy0.map(|w| word(w, p));
    let s1 = rule.copy1.map(|w| word(w, p));
    let s0: Vec<Mat> = s0.into_iter().collect::<Result<_>>()?;
    let s1: Vec<Mat> = s1.into_iter().collect::<Result<_>>()?;
    let distinct = |s: &[Mat]| s[0] != s[1] && s[0] != s[2] && s[1] != s[2];
    if !distinct(&s0) || !distinct(&s1) {
        return domain(format!("rule words collide modulo {p}"));
    }
    let supports: Vec<Vec<usize>> = group
        .iter()
        .map(|g| {
            let mut row: Vec<usize> = s0
                .iter()
                .map(|s| index[&mul(g, s, p)])
                .chain(s1.iter().map(|s| order + index[&mul(g, s, p)]))
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    let h = BitMatrix::from_supports(2 * order, &supports)?;
    let mut prov = Provenance::new("margulis").param("p", p);
    prov.adjacency_rule = Some(rule.id.to_string());
    let d = if p == 11 {
        Distance::Estimated(40)
    } else {
        Distance::Unknown
    };
    Ok(LinearCode::from_parity_check(h, d, prov))
}
