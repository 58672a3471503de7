use crate::error::{domain, Result};
use crate::gf2::{alist, BitMatrix, BitVector};

use super::{Distance, LinearCode, Provenance};

/// Generator polynomial of the cyclic [23,12,7] Golay code, lowest degree
/// first: `1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11`.
pub const GOLAY_GENERATOR: [u8; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];

/// [7,4,3] Hamming code; column `j` of `H` is `j + 1` in binary.
pub fn hamming7() -> LinearCode {
    let h = BitMatrix::parse_rows(&["0001111", "0110011", "1010101"]).unwrap();
    LinearCode {
        dual_distance: Some(Distance::Exact(4)),
        ..LinearCode::from_parity_check(h, Distance::Exact(3), Provenance::new("hamming7"))
    }
}

/// Extended [24,12,8] Golay code. It is self-dual, so the generator matrix
/// (twelve shifts of the cyclic generator, each extended by overall parity)
/// doubles as `H`.
pub fn golay24() -> LinearCode {
    let rows = (0..12)
        .map(|shift| {
            let mut v = BitVector::from_indices(
                24,
                GOLAY_GENERATOR
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c == 1)
                    .map(|(i, _)| i + shift),
            );
            if v.weight() % 2 == 1 {
                v.set(23, true);
            }
            v
        })
        .collect();
    let h = BitMatrix::from_rows(24, rows).unwrap();
    LinearCode {
        dual_distance: Some(Distance::Exact(8)),
        ..LinearCode::from_parity_check(h, Distance::Exact(8), Provenance::new("golay24"))
    }
}

/// [n,1,n] repetition code with the parity chain `x_i + x_{i+1} = 0`.
pub fn repetition(n: usize) -> Result<LinearCode> {
    if n < 2 {
        return domain("repetition code needs n >= 2");
    }
    let supports: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
    let h = BitMatrix::from_supports(n, &supports)?;
    Ok(LinearCode {
        dual_distance: Some(Distance::Exact(2)),
        ..LinearCode::from_parity_check(h, Distance::Exact(n as u64), Provenance::new("repetition").param("n", n))
    })
}

/// Reads `H` from alist text. When `k` is given it must match the rank.
/// The distance is enumerated when `k` is small enough.
pub fn code_from_alist(text: &str, k: Option<usize>) -> Result<LinearCode> {
    let h = alist::parse(text)?;
    let mut code = LinearCode::from_parity_check(h, Distance::Unknown, Provenance::new("alist"));
    if let Some(k) = k {
        if k != code.k {
            return domain(format!("declared k = {k}, but the matrix has rank {} (k = {})", code.redundancy(), code.k));
        }
    }
    if code.k > 0 && code.k <= 12 {
        code.d = Distance::Exact(code.enumerate_distance()?);
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::min_weight_of_span;

    #[test]
    fn hamming_by_enumeration() {
        let c = hamming7();
        assert_eq!((c.n, c.k), (7, 4));
        assert_eq!(c.enumerate_distance().unwrap(), 3);
        assert_eq!(min_weight_of_span(&c.h).unwrap(), 4);
    }

    #[test]
    fn golay_is_self_dual_with_distance_eight() {
        let c = golay24();
        assert_eq!((c.n, c.k, c.h.nrows()), (24, 12, 12));
        for i in 0..12 {
            for j in 0..12 {
                assert!(!c.h.row(i).dot(c.h.row(j)));
            }
        }
        assert_eq!(c.enumerate_distance().unwrap(), 8);
    }

    #[test]
    fn repetition_code() {
        let c = repetition(5).unwrap();
        assert_eq!((c.h.nrows(), c.h.ncols(), c.k), (4, 5, 1));
        assert_eq!(c.enumerate_distance().unwrap(), 5);
        assert!(repetition(1).is_err());
    }

    #[test]
    fn alist_import_checks_rank() {
        let text = alist::serialize(&hamming7().h);
        let c = code_from_alist(&text, Some(4)).unwrap();
        assert_eq!(c.d, Distance::Exact(3));
        assert!(code_from_alist(&text, Some(3)).is_err());
    }
}
