use serde::Serialize;
use trapredund::bounds::{min_m, BoundQuery, BoundResult, Certificate, Variant};
use trapredund::tables;

use crate::args::{BoundsArgs, Global, VariantArg};
use crate::error::CliError;
use crate::output::{csv_table, report, Meta};

#[derive(Debug, Serialize)]
struct Row {
    code: String,
    a: u64,
    b: u64,
    variant: &'static str,
    epsilon: Option<String>,
    elementary: bool,
    m: u64,
    m_hat: u64,
    exact: bool,
    expected_m: Option<u64>,
    expected_m_hat: Option<u64>,
    deviation: Option<i64>,
    within_tolerance: Option<bool>,
    certificate: String,
    anomaly: Option<String>,
    wall_time_ms: Option<f64>,
}

#[derive(Serialize)]
struct Output<'a> {
    preset: Option<&'a str>,
    rows: &'a [Row],
    certificates: Vec<&'a Certificate>,
}

fn certificate_text(c: &Certificate, exact: bool) -> String {
    match c {
        Certificate::Exact { lhs, .. } => {
            if exact {
                format!("lhs<={}", lhs.upper)
            } else {
                format!("lhs<={}", lhs.approx)
            }
        }
        Certificate::Log2 { lhs, rhs, .. } => format!("log2 lhs<={} log2 rhs>={}", lhs.upper, rhs.lower),
    }
}

fn row(code: String, r: &BoundResult, global: &Global, exact_text: bool) -> Row {
    let (variant, epsilon) = match &r.query.variant {
        Variant::Std => ("std", None),
        Variant::Hp { epsilon } => ("hp", Some(epsilon.as_str().to_string())),
    };
    Row {
        code,
        a: r.query.a,
        b: r.query.b,
        variant,
        epsilon,
        elementary: r.query.elementary,
        m: r.m,
        m_hat: r.m_hat,
        exact: r.exact,
        expected_m: None,
        expected_m_hat: None,
        deviation: None,
        within_tolerance: None,
        certificate: certificate_text(&r.certificate, exact_text),
        anomaly: r.anomaly.clone(),
        wall_time_ms: if global.timing { r.wall_time_ms } else { None },
    }
}

pub fn run(global: &Global, args: &BoundsArgs) -> Result<(), CliError> {
    let exact_text = global.exact || global.format == crate::args::Format::Json;
    let mut rows = Vec::new();
    let mut results = Vec::new();
    if let Some(name) = &args.preset {
        let preset = tables::preset(name)?;
        for cell in tables::evaluate(&preset)? {
            let mut r = row(cell.code.to_string(), &cell.result, global, exact_text);
            r.expected_m = Some(cell.expected_m);
            r.expected_m_hat = Some(cell.expected_m_hat);
            r.deviation = Some(cell.deviation);
            r.within_tolerance = Some(cell.within_tolerance);
            if cell.deviation != 0 {
                eprintln!(
                    "discrepancy: {} a={} {}: m={} published {} ({:+})",
                    cell.code, r.a, cell.column, cell.result.m, cell.expected_m, cell.deviation
                );
            }
            rows.push(r);
            results.push(cell.result);
        }
    } else {
        let (n, k) = (args.n.expect("required"), args.k.expect("required"));
        let mut queries = Vec::new();
        for &a in &args.a {
            for &b in &args.b {
                let base = match args.variant {
                    VariantArg::Std => vec![BoundQuery::std(n, k, a, b)],
                    VariantArg::Hp => args
                        .epsilon
                        .iter()
                        .map(|e| BoundQuery::hp(n, k, a, b, e))
                        .collect::<Result<_, _>>()?,
                };
                for mut q in base {
                    q.elementary = args.elementary;
                    q.d = args.d;
                    q.allow_any_a = args.allow_any_a;
                    queries.push(q);
                }
            }
        }
        for q in &queries {
            let r = min_m(q)?;
            rows.push(row(format!("[{n},{k}]"), &r, global, exact_text));
            results.push(r);
        }
    }
    let meta = Meta::new("bounds", global, args, Vec::new());
    let out = Output {
        preset: args.preset.as_deref(),
        rows: &rows,
        certificates: results.iter().map(|r| &r.certificate).collect(),
    };
    report(global, &meta, &[("bounds", csv_table(&rows)?)], &out)
}
