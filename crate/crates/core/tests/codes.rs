use std::time::Instant;

use trapredund::codes::{build_margulis, build_pg_code, full_dual_matrix, golay24, hamming7, repetition, Distance};

#[test]
fn margulis_p11_structure() {
    let t = Instant::now();
    let c = build_margulis(11).unwrap();
    assert_eq!((c.h.nrows(), c.h.ncols()), (1320, 2640));
    assert!(c.h.column_weights().iter().all(|&w| w == 3));
    assert!(c.h.row_weights().iter().all(|&w| w == 6));
    assert_eq!(c.redundancy(), 1320);
    assert_eq!(c.k, 1320);
    assert_eq!(c.h.tanner_girth(), Some(8));
    assert_eq!(c.d, Distance::Estimated(40));
    // Deterministic.
    assert_eq!(build_margulis(11).unwrap().h, c.h);
    println!("margulis checks took {:?}", t.elapsed());
}

#[test]
fn pg_ranks_follow_three_to_the_s_plus_one() {
    for (q, rank) in [(2u32, 4usize), (4, 10), (8, 28), (16, 82), (32, 244)] {
        let t = Instant::now();
        let c = build_pg_code(2, q).unwrap();
        assert_eq!(c.n as u32, q * q + q + 1);
        assert_eq!(c.redundancy(), rank);
        assert_eq!(c.d, Distance::Exact(q as u64 + 2));
        println!("PG(2,{q}) rank {rank} in {:?}", t.elapsed());
    }
}

#[test]
fn hyperoval_support_is_a_codeword() {
    use trapredund::geometry::{enumerate_arcs, ProjectiveGeometry, DEFAULT_ARC_BUDGET};
    let geo = ProjectiveGeometry::new(2, 4).unwrap();
    let h = geo.incidence_matrix();
    let arcs = enumerate_arcs(&geo, 6, usize::MAX, DEFAULT_ARC_BUDGET).unwrap();
    assert_eq!(arcs.arcs.len(), 168);
    for arc in &arcs.arcs {
        assert_eq!(h.odd_row_profile(&arc.points).unwrap().b, 0);
    }
}

/// Every a-column restriction of the full dual codebook has exactly
/// 2^(n-k-1) odd rows when a < d.
fn proposition_one(code: &trapredund::codes::LinearCode) {
    let full = full_dual_matrix(code).unwrap();
    let d = code.d.value().unwrap() as usize;
    let half = full.nrows() / 2;
    let n = code.n;
    for mask in 1u32..1 << n {
        let a = mask.count_ones() as usize;
        if a >= d {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        assert_eq!(full.odd_row_profile(&cols).unwrap().b, half, "{cols:?}");
    }
}

#[test]
fn full_dual_is_an_orthogonal_array() {
    proposition_one(&hamming7());
    for n in 2..=6 {
        proposition_one(&repetition(n).unwrap());
    }
    // golay24: n - k = 12 gives 4096 rows; spot-check a = 1..3 on a prefix.
    let g = golay24();
    let full = full_dual_matrix(&g).unwrap();
    for cols in [[0usize, 1, 2], [5, 11, 23], [3, 7, 19]] {
        assert_eq!(full.odd_row_profile(&cols).unwrap().b, 2048);
    }
}
