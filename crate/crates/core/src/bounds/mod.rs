//! Row-count bounds for trapping-set-free parity-check matrices.
//!
//! Standard bounds are decided in exact integer arithmetic against a rational
//! bracket for `e`. High-probability bounds involve `(1 - eps/N)^tau` with
//! `tau` far beyond any exact representation and are decided with
//! [`Log2Interval`] enclosures.

mod asymptotic;
mod constructive;
mod exact;
mod interval;
mod probability;

use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use asymptotic::{asymptotic_constructive, asymptotic_m, entropy2, log2_biguint, phi, AsymptoticKind};
pub use constructive::{constructive_bound, trapping_redundancy_upper, Constructive};
pub use exact::{rational_sci, rational_string, EBracket};
pub use interval::{LogBracket, Log2Interval};
pub use probability::{p_event, Probability};

use crate::error::{domain, Error, Result};

/// Default fractional bits for log-domain decisions.
pub const DEFAULT_FRAC_BITS: u32 = 256;
/// Precision escalation stops here.
pub const MAX_FRAC_BITS: u32 = 4096;
/// `e` bracket width `10^-E_DIGITS` used first.
pub const E_DIGITS: u32 = 30;
/// Extra values of `m` checked after the first satisfying one.
pub const LOOKAHEAD: u64 = 8;
/// Largest `m` the scan will try.
pub const MAX_M: u64 = 1 << 20;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Number of `a`-subsets of `n` columns that share a column with a fixed
/// one, excluding itself: `C(n,a) - C(n-a,a) - 1`.
pub fn tau(n: u64, a: u64) -> Result<BigUint> {
    if a > n {
        return domain(format!("a = {a} exceeds n = {n}"));
    }
    Ok(binomial(n, a) - binomial(n - a, a) - 1u8)
}

/// `sum_{j<b} C(m, j)`.
pub fn odd_tail_sum(m: u64, b: u64) -> BigUint {
    let mut term = BigUint::one();
    let mut sum = BigUint::zero();
    for j in 0..b.min(m + 1) {
        sum += &term;
        term = term * (m - j) / (j + 1);
    }
    sum
}

/// `sum_{j<b} C(m,j) 2^j a^j (a^2-a+2)^(m-j)`; the probability is this over
/// `2^((a+1)m)`.
pub fn elementary_tail_sum(m: u64, a: u64, b: u64) -> BigUint {
    let quad = BigUint::from(a * a - a + 2);
    let two_a = BigUint::from(2 * a);
    let top = b.min(m + 1);
    if top == 0 {
        return BigUint::zero();
    }
    // Highest power of quad needed is m; build down from there.
    let mut quad_pow = quad.pow((m - (top - 1)) as u32);
    let mut terms = Vec::with_capacity(top as usize);
    for j in (0..top).rev() {
        terms.push((j, quad_pow.clone()));
        quad_pow *= &quad;
    }
    let mut binom = BigUint::one();
    let mut pow = BigUint::one();
    let mut sum = BigUint::zero();
    for (j, qp) in terms.into_iter().rev() {
        sum += &binom * &pow * qp;
        binom = binom * (m - j) / (j + 1);
        pow *= &two_a;
    }
    sum
}

/// Failure probability threshold `eps`, kept exactly as a reduced fraction
/// alongside the text it was parsed from.
#[derive(Debug, Clone)]
pub struct Epsilon {
    num: BigUint,
    den: BigUint,
    text: String,
}

impl PartialEq for Epsilon {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for Epsilon {}

impl Epsilon {
    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn to_f64(&self) -> f64 {
        probability::ratio_to_f64(&self.num, &self.den)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone().into(), self.den.clone().into())
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    /// Accepts `0.01`, `1e-20`, `1/3`, `2.5E-3`.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim().to_string();
        let bad = || Error::InputDomain(format!("cannot parse epsilon {text:?}"));
        let (num, den) = if let Some((p, q)) = text.split_once('/') {
            let p: BigUint = p.trim().parse().map_err(|_| bad())?;
            let q: BigUint = q.trim().parse().map_err(|_| bad())?;
            (p, q)
        } else {
            let (mant, exp) = match text.find(['e', 'E']) {
                Some(i) => (&text[..i], text[i + 1..].parse::<i32>().map_err(|_| bad())?),
                None => (&text[..], 0),
            };
            let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
            if int.is_empty() && frac.is_empty() {
                return Err(bad());
            }
            if !(int.chars().all(|c| c.is_ascii_digit()) && frac.chars().all(|c| c.is_ascii_digit())) {
                return Err(bad());
            }
            let digits: BigUint = format!("{int}{frac}").parse().map_err(|_| bad())?;
            let scale = exp - frac.len() as i32;
            let ten = BigUint::from(10u8);
            if scale >= 0 {
                (digits * ten.pow(scale as u32), BigUint::one())
            } else {
                (digits, ten.pow((-scale) as u32))
            }
        };
        if num.is_zero() || num >= den {
            return domain(format!("epsilon must lie in (0, 1), got {text}"));
        }
        let r = BigRational::new(num.into(), den.into());
        Ok(Self {
            num: r.numer().magnitude().clone(),
            den: r.denom().magnitude().clone(),
            text,
        })
    }
}

impl Serialize for Epsilon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.text)
    }
}

impl<'de> Deserialize<'de> for Epsilon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "variant")]
pub enum Variant {
    Std,
    Hp { epsilon: Epsilon },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundQuery {
    pub n: u64,
    pub k: u64,
    pub a: u64,
    pub b: u64,
    #[serde(flatten)]
    pub variant: Variant,
    pub elementary: bool,
    /// Minimum distance of the code, when known; limits `a <= (d-1)/2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    /// Skip the `a <= (d-1)/2` check.
    #[serde(default)]
    pub allow_any_a: bool,
}

impl BoundQuery {
    pub fn std(n: u64, k: u64, a: u64, b: u64) -> Self {
        Self {
            n,
            k,
            a,
            b,
            variant: Variant::Std,
            elementary: false,
            d: None,
            allow_any_a: false,
        }
    }

    pub fn hp(n: u64, k: u64, a: u64, b: u64, epsilon: &str) -> Result<Self> {
        Ok(Self {
            variant: Variant::Hp {
                epsilon: epsilon.parse()?,
            },
            ..Self::std(n, k, a, b)
        })
    }

    pub fn elementary(mut self) -> Self {
        self.elementary = true;
        self
    }

    pub fn with_distance(mut self, d: u64) -> Self {
        self.d = Some(d);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.b == 0 {
            return domain("b must be at least 1");
        }
        if self.a == 0 || self.a > self.n {
            return domain(format!("need 1 <= a <= n, got a = {}, n = {}", self.a, self.n));
        }
        if self.k >= self.n {
            return domain(format!("need n > k, got n = {}, k = {}", self.n, self.k));
        }
        if let (Some(d), false) = (self.d, self.allow_any_a) {
            let cap = d.saturating_sub(1) / 2;
            if self.a > cap {
                return domain(format!(
                    "a = {} exceeds floor((d-1)/2) = {cap} for d = {d}",
                    self.a
                ));
            }
        }
        Ok(())
    }

    /// `log2` of the left-hand side core and the denominator exponent.
    fn lhs_parts(&self, m: u64) -> (BigUint, u64) {
        if self.elementary {
            (elementary_tail_sum(m, self.a, self.b), (self.a + 1) * m)
        } else {
            (odd_tail_sum(m, self.b), m)
        }
    }
}

/// A rational enclosure `[lower, upper]` of one side of the inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalBracket {
    pub lower: String,
    pub upper: String,
    /// Short scientific rendering of the upper end.
    pub approx: String,
}

/// Evidence for the reported `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    /// `lhs` encloses `e (tau + 1) P` exactly; the inequality is `lhs <= 1`.
    Exact {
        e_terms: u32,
        lhs: RationalBracket,
        lhs_prev: Option<RationalBracket>,
    },
    /// `log2` enclosures of both sides at `m` (and at `m - 1`).
    Log2 {
        frac_bits: u32,
        lhs: LogBracket,
        rhs: LogBracket,
        prev: Option<(LogBracket, LogBracket)>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundResult {
    pub query: BoundQuery,
    pub m: u64,
    pub m_hat: u64,
    pub exact: bool,
    pub certificate: Certificate,
    /// Set when one of the next [`LOOKAHEAD`] values of `m` fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anomaly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

enum Decision<C> {
    Holds(C),
    Fails(C),
}

/// Scans `m = b, b+1, ...` for the first `m` where `decide` holds.
fn scan<C: Clone>(
    b: u64,
    mut decide: impl FnMut(u64) -> Result<Decision<C>>,
) -> Result<(u64, C, Option<C>, Option<String>)> {
    let mut prev: Option<C> = None;
    for m in b..=MAX_M {
        match decide(m)? {
            Decision::Fails(c) => prev = Some(c),
            Decision::Holds(c) => {
                let mut anomaly = None;
                for next in m + 1..=m + LOOKAHEAD {
                    if let Decision::Fails(_) = decide(next)? {
                        anomaly = Some(format!("inequality holds at m = {m} but fails at m = {next}"));
                        break;
                    }
                }
                return Ok((m, c, prev, anomaly));
            }
        }
    }
    Err(Error::InputDomain(format!("no m <= {MAX_M} satisfies the inequality")))
}

struct StdEval<'q> {
    query: &'q BoundQuery,
    tau1: BigUint,
    e: EBracket,
}

impl StdEval<'_> {
    /// Decides `e tau1 S <= 2^exp`, refining the `e` bracket as needed.
    fn decide(&mut self, m: u64) -> Result<Decision<RationalBracket>> {
        let (s, exp) = self.query.lhs_parts(m);
        let core = &self.tau1 * s;
        loop {
            let den = (BigUint::one() << exp) * &self.e.den;
            let lo = &self.e.lo_num * &core;
            let hi = &self.e.hi_num * &core;
            let bracket = || RationalBracket {
                lower: rational_string(&lo, &den),
                upper: rational_string(&hi, &den),
                approx: rational_sci(&hi, &den, 12),
            };
            if hi <= den {
                return Ok(Decision::Holds(bracket()));
            }
            if lo > den {
                return Ok(Decision::Fails(bracket()));
            }
            if self.e.terms > 1 << 14 {
                return Err(Error::Precision(format!("e bracket cannot separate the sides at m = {m}")));
            }
            self.e = self.e.refined();
        }
    }
}

struct HpEval<'q> {
    query: &'q BoundQuery,
    eps: Epsilon,
    tau: BigUint,
    n_choose_a: BigUint,
    frac_bits: u32,
}

impl HpEval<'_> {
    fn sides(&self, m: u64, bits: u32) -> (Log2Interval, Log2Interval) {
        let (s, exp) = self.query.lhs_parts(m);
        let lhs = Log2Interval::log2_of(&s, bits).offset(-(exp as i64));
        // x = eps / N
        let x_den = self.eps.den() * &self.n_choose_a;
        let rhs = Log2Interval::log2_of_ratio(self.eps.num(), &x_den, bits)
            .add(&Log2Interval::scaled_log2_one_minus(&self.tau, self.eps.num(), &x_den, bits));
        (lhs, rhs)
    }

    fn decide(&mut self, m: u64) -> Result<Decision<(LogBracket, LogBracket)>> {
        let mut bits = self.frac_bits;
        loop {
            let (lhs, rhs) = self.sides(m, bits);
            let render = || (lhs.to_decimal(30), rhs.to_decimal(30));
            if lhs.certainly_le(&rhs) {
                self.frac_bits = self.frac_bits.max(bits);
                return Ok(Decision::Holds(render()));
            }
            if lhs.certainly_gt(&rhs) {
                self.frac_bits = self.frac_bits.max(bits);
                return Ok(Decision::Fails(render()));
            }
            if bits >= MAX_FRAC_BITS {
                return Err(Error::Precision(format!(
                    "log2 enclosures still overlap at m = {m} with {bits} fractional bits"
                )));
            }
            bits *= 2;
        }
    }
}

/// Minimal `m` for the query, dispatched on variant and elementary flag.
pub fn min_m(query: &BoundQuery) -> Result<BoundResult> {
    query.validate()?;
    let start = Instant::now();
    let (m, certificate, exact, anomaly) = match &query.variant {
        Variant::Std => {
            let mut ev = StdEval {
                query,
                tau1: tau(query.n, query.a)? + 1u8,
                e: EBracket::with_width_digits(E_DIGITS),
            };
            let (m, lhs, lhs_prev, anomaly) = scan(query.b, |m| ev.decide(m))?;
            let cert = Certificate::Exact {
                e_terms: ev.e.terms,
                lhs,
                lhs_prev,
            };
            (m, cert, true, anomaly)
        }
        Variant::Hp { epsilon } => {
            let n_choose_a = binomial(query.n, query.a);
            if BigUint::from(2u8) * epsilon.num() > epsilon.den() * &n_choose_a {
                return domain("eps / C(n, a) must not exceed 1/2");
            }
            let mut ev = HpEval {
                query,
                eps: epsilon.clone(),
                tau: tau(query.n, query.a)?,
                n_choose_a,
                frac_bits: DEFAULT_FRAC_BITS,
            };
            let (m, (lhs, rhs), prev, anomaly) = scan(query.b, |m| ev.decide(m))?;
            let cert = Certificate::Log2 {
                frac_bits: ev.frac_bits,
                lhs,
                rhs,
                prev,
            };
            (m, cert, false, anomaly)
        }
    };
    Ok(BoundResult {
        query: query.clone(),
        m,
        m_hat: trapping_redundancy_upper(m, query.n, query.k)?,
        exact,
        certificate,
        anomaly,
        wall_time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}

pub fn min_m_std(n: u64, k: u64, a: u64, b: u64) -> Result<BoundResult> {
    min_m(&BoundQuery::std(n, k, a, b))
}

pub fn min_m_hp(n: u64, k: u64, a: u64, b: u64, epsilon: &str) -> Result<BoundResult> {
    min_m(&BoundQuery::hp(n, k, a, b, epsilon)?)
}

pub fn min_m_std_elementary(n: u64, k: u64, a: u64, b: u64) -> Result<BoundResult> {
    min_m(&BoundQuery::std(n, k, a, b).elementary())
}

pub fn min_m_hp_elementary(n: u64, k: u64, a: u64, b: u64, epsilon: &str) -> Result<BoundResult> {
    min_m(&BoundQuery::hp(n, k, a, b, epsilon)?.elementary())
}

/// The event probability on the left side at `m`, as an exact rational.
pub fn lhs_probability(query: &BoundQuery, m: u64) -> BigRational {
    let (s, exp) = query.lhs_parts(m);
    BigRational::new(BigInt::from(s), BigInt::from(BigUint::one() << exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_tau(n: u64, a: u64) -> u64 {
        // Count a-subsets meeting {0..a}, other than itself.
        let fixed: u64 = (1 << a) - 1;
        (0u64..1 << n)
            .filter(|s| s.count_ones() as u64 == a && s & fixed != 0 && *s != fixed)
            .count() as u64
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(7, 2).unwrap(), BigUint::from(10u8));
        assert_eq!(tau(9, 9).unwrap(), BigUint::zero());
        assert!(tau(3, 4).is_err());
        for n in 1..=10 {
            for a in 1..=n.min(4) {
                assert_eq!(tau(n, a).unwrap(), BigUint::from(brute_tau(n, a)), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 3), BigUint::from(2024u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(odd_tail_sum(10, 3), BigUint::from(1u8 + 10 + 45));
        assert_eq!(odd_tail_sum(3, 10), BigUint::from(8u8));
    }

    #[test]
    fn elementary_sum_matches_direct() {
        for (m, a, b) in [(5u64, 2u64, 3u64), (7, 1, 4), (4, 3, 5), (10, 6, 1)] {
            let mut direct = BigUint::zero();
            for j in 0..b.min(m + 1) {
                direct += binomial(m, j)
                    * BigUint::from(2 * a).pow(j as u32)
                    * BigUint::from(a * a - a + 2).pow((m - j) as u32);
            }
            assert_eq!(elementary_tail_sum(m, a, b), direct);
        }
        // a = 1: 2^j * 1 * 2^(m-j) = 2^m, over 2^(2m) = the plain form.
        assert_eq!(elementary_tail_sum(9, 1, 4), odd_tail_sum(9, 4) << 9);
    }

    #[test]
    fn golay_standard_bound() {
        let r = min_m_std(24, 12, 3, 2).unwrap();
        assert_eq!((r.m, r.m_hat), (15, 26));
        assert!(r.exact);
        assert!(r.anomaly.is_none());
        // e * 694 * (m + 1) <= 2^m first at m = 15.
        let e = std::f64::consts::E;
        assert!(e * 694.0 * 16.0 <= 2f64.powi(15));
        assert!(e * 694.0 * 15.0 > 2f64.powi(14));
    }

    #[test]
    fn table_corners() {
        assert_eq!(min_m_std(2640, 1320, 6, 5).unwrap().m_hat, 1394);
        assert_eq!(min_m_std_elementary(2640, 1320, 14, 5).unwrap().m_hat, 1336);
        assert_eq!(min_m_hp(2640, 1320, 6, 5, "0.01").unwrap().m_hat, 1406);
        assert_eq!(min_m_hp_elementary(273, 191, 8, 80, "1e-20").unwrap().m, 80);
    }

    #[test]
    fn distance_guard() {
        let q = BoundQuery::std(24, 12, 4, 2).with_distance(8);
        assert!(min_m(&q).is_err());
        let q = BoundQuery {
            allow_any_a: true,
            ..q
        };
        assert!(min_m(&q).is_ok());
        assert!(min_m_std(24, 12, 3, 0).is_err());
    }

    #[test]
    fn epsilon_parsing() {
        let e: Epsilon = "1e-20".parse().unwrap();
        assert_eq!(e.den(), &BigUint::from(10u8).pow(20));
        let e: Epsilon = "0.01".parse().unwrap();
        assert_eq!((e.num(), e.den()), (&BigUint::one(), &BigUint::from(100u8)));
        let e: Epsilon = "2/6".parse().unwrap();
        assert_eq!(e.den(), &BigUint::from(3u8));
        for bad in ["0", "1", "1.5", "abc", "-0.1", ".", "1e"] {
            assert!(bad.parse::<Epsilon>().is_err(), "{bad}");
        }
        let json = serde_json::to_string(&BoundQuery::hp(10, 5, 1, 1, "0.25").unwrap()).unwrap();
        assert!(json.contains("\"epsilon\":\"0.25\""), "{json}");
        let back: BoundQuery = serde_json::from_str(&json).unwrap();
        assert_eq!(back.variant, Variant::Hp { epsilon: "1/4".parse().unwrap() });
    }

    #[test]
    fn certificates_bracket_the_boundary() {
        let r = min_m_std(2640, 1320, 8, 5).unwrap();
        let Certificate::Exact { lhs, lhs_prev, .. } = &r.certificate else {
            panic!()
        };
        let parse = |s: &str| {
            let (p, q) = s.split_once('/').unwrap();
            BigRational::new(p.parse().unwrap(), q.parse().unwrap())
        };
        assert!(parse(&lhs.upper) <= BigRational::one());
        assert!(parse(&lhs_prev.as_ref().unwrap().lower) > BigRational::one());
    }
}
