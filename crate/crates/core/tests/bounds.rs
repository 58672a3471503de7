use num_rational::BigRational;
use trapredund::bounds::{min_m, min_m_std, p_event, BoundQuery, Certificate};

/// P{fewer than b odd rows} by enumerating every tuple of m uniform row
/// patterns on a columns.
fn enumerated_p(m: u32, a: u32, b: u32, elementary: bool) -> BigRational {
    let patterns = 1u64 << a;
    let total = patterns.pow(m);
    let mut hits = 0u64;
    for t in 0..total {
        let mut x = t;
        let mut odd = 0;
        let mut ok = true;
        for _ in 0..m {
            let p = x % patterns;
            x /= patterns;
            odd += p.count_ones() % 2;
            ok &= p.count_ones() <= 2;
        }
        if odd < b && (ok || !elementary) {
            hits += 1;
        }
    }
    BigRational::new(hits.into(), total.into())
}

#[test]
fn event_probability_matches_enumeration() {
    for (m, a) in [(1, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (3, 4), (5, 1)] {
        for b in 1..=m {
            for elementary in [false, true] {
                let p: BigRational = p_event(m as u64, a as u64, b as u64, elementary).unwrap();
                assert_eq!(p, enumerated_p(m, a, b, elementary), "m={m} a={a} b={b} elem={elementary}");
            }
        }
    }
}

#[test]
fn golay_std_bound_holds_exactly_at_15() {
    let r = min_m_std(24, 12, 3, 2).unwrap();
    assert_eq!((r.m, r.m_hat), (15, 26));
    assert!(r.exact);
    let Certificate::Exact { lhs, lhs_prev, .. } = &r.certificate else {
        panic!("std results carry exact certificates");
    };
    // lhs encloses e (tau + 1) P and must sit at or below 1; at m - 1 it must not.
    let upper: BigRational = lhs.upper.parse().unwrap();
    assert!(upper <= BigRational::from_integer(1.into()));
    let prev_lower: BigRational = lhs_prev.as_ref().unwrap().lower.parse().unwrap();
    assert!(prev_lower > BigRational::from_integer(1.into()));
}

#[test]
fn m_never_below_b() {
    for b in [1, 5, 40] {
        let r = min_m_std(24, 12, 1, b).unwrap();
        assert!(r.m >= b);
    }
}

#[test]
fn elementary_needs_no_more_rows() {
    for a in 1..=4 {
        for b in 1..=6 {
            let std = min_m(&BoundQuery::std(63, 30, a, b)).unwrap().m;
            let elem = min_m(&BoundQuery::std(63, 30, a, b).elementary()).unwrap().m;
            assert!(elem <= std, "a={a} b={b}");
        }
    }
}

#[test]
fn a_is_capped_by_distance() {
    assert!(min_m(&BoundQuery::std(24, 12, 4, 2).with_distance(8)).is_err());
    let mut q = BoundQuery::std(24, 12, 4, 2).with_distance(8);
    q.allow_any_a = true;
    assert!(min_m(&q).is_ok());
    assert!(min_m(&BoundQuery::std(24, 12, 3, 0)).is_err());
    assert!(BoundQuery::hp(24, 12, 3, 2, "1.5").is_err());
}
