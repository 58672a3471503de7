use std::time::Instant;

use trapredund::tables::{evaluate, PRESETS};

#[test]
fn presets_reproduce() {
    for p in PRESETS {
        let t = Instant::now();
        let cells = evaluate(&p).unwrap();
        for c in &cells {
            println!(
                "{} {} a={} {}: m={} expected {} dev {}",
                p.name, c.code, c.result.query.a, c.column, c.result.m, c.expected_m, c.deviation
            );
            assert!(c.within_tolerance);
            assert!(c.result.anomaly.is_none());
        }
        println!("{} took {:?}", p.name, t.elapsed());
    }
}
