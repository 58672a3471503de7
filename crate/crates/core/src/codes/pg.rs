use crate::error::Result;
use crate::geometry::ProjectiveGeometry;

use super::{Distance, LinearCode, Provenance};

/// Type-I projective geometry code: `H` is the line-point incidence matrix
/// of PG(M, q), one row per line. In PG(2, q) with q even the hyperovals
/// give `d = q + 2`; other cases are left unknown.
pub fn build_pg_code(dim: u32, q: u32) -> Result<LinearCode> {
    let geo = ProjectiveGeometry::new(dim, q)?;
    let h = geo.incidence_matrix();
    let d = if dim == 2 && q.is_multiple_of(2) {
        Distance::Exact(q as u64 + 2)
    } else {
        Distance::Unknown
    };
    let mut prov = Provenance::new("pg").param("m", dim).param("q", q);
    if geo.field().degree() > 1 {
        prov.modulus = Some(geo.field().modulus().to_vec());
    }
    Ok(LinearCode::from_parity_check(h, d, prov))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        // 3^s + 1 for q = 2^s.
        for (q, rank) in [(2, 4), (4, 10), (8, 28)] {
            let c = build_pg_code(2, q).unwrap();
            assert_eq!(c.redundancy(), rank, "q = {q}");
            assert!(c.is_redundant());
        }
    }

    #[test]
    fn fano_is_hamming_dual() {
        let c = build_pg_code(2, 2).unwrap();
        assert_eq!((c.n, c.k), (7, 3));
        assert_eq!(c.enumerate_distance().unwrap(), 4);
    }
}
