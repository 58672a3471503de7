//! Certified base-2 logarithms in fixed-point interval arithmetic.
//!
//! A [`Log2Interval`] stores two integers `lo`, `hi` meaning
//! `[lo / 2^F, hi / 2^F]` for `F = frac_bits`. Every operation rounds the
//! lower end down and the upper end up, and every truncated series carries an
//! explicit tail bound, so the true value is always inside the interval.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Extra bits carried internally beyond the requested precision.
const GUARD_BITS: u32 = 32;

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// `[floor, ceil]` of `num * 2^w / den` for non-negative operands.
fn fixed_bracket(num: &BigUint, den: &BigUint, w: u32) -> (BigInt, BigInt) {
    let n = BigInt::from(num.clone()) << w;
    let d = BigInt::from(den.clone());
    (floor_div(&n, &d), ceil_div(&n, &d))
}

/// `ln((1+y)/(1-y)) = 2 atanh(y)` for `y = num/den` in `[0, 1/3]`, as a
/// fixed-point bracket with `w` fractional bits.
fn two_atanh(num: &BigUint, den: &BigUint, w: u32) -> (BigInt, BigInt) {
    debug_assert!(BigUint::from(3u8) * num <= *den);
    let one = pow2(w);
    let (y_lo, y_hi) = fixed_bracket(num, den, w);
    let y2_lo = floor_div(&(&y_lo * &y_lo), &one);
    let y2_hi = ceil_div(&(&y_hi * &y_hi), &one);
    let (mut t_lo, mut t_hi) = (y_lo, y_hi);
    let (mut s_lo, mut s_hi) = (BigInt::zero(), BigInt::zero());
    let mut k: u64 = 0;
    loop {
        let div = BigInt::from(2 * k + 1);
        s_lo += floor_div(&t_lo, &div);
        s_hi += ceil_div(&t_hi, &div);
        t_lo = floor_div(&(&t_lo * &y2_lo), &one);
        t_hi = ceil_div(&(&t_hi * &y2_hi), &one);
        k += 1;
        if t_hi <= BigInt::one() {
            // Remaining terms sum to at most t/(1 - y^2) <= 9t/8.
            s_hi += BigInt::from(2u8) * &t_hi + BigInt::one();
            break;
        }
    }
    (s_lo * 2, s_hi * 2)
}

/// Bracket for `ln 2` with `w` fractional bits.
fn ln2(w: u32) -> (BigInt, BigInt) {
    two_atanh(&BigUint::one(), &BigUint::from(3u8), w)
}

/// Divides a fixed-point bracket by a positive fixed-point bracket.
fn div_bracket(
    (a_lo, a_hi): (&BigInt, &BigInt),
    (c_lo, c_hi): (&BigInt, &BigInt),
    w: u32,
) -> (BigInt, BigInt) {
    debug_assert!(c_lo.is_positive());
    let one = pow2(w);
    let cands_lo = [
        floor_div(&(a_lo * &one), c_lo),
        floor_div(&(a_lo * &one), c_hi),
    ];
    let cands_hi = [
        ceil_div(&(a_hi * &one), c_lo),
        ceil_div(&(a_hi * &one), c_hi),
    ];
    (
        cands_lo.into_iter().min().unwrap(),
        cands_hi.into_iter().max().unwrap(),
    )
}

/// A certified enclosure of a base-2 logarithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Log2Interval {
    lo: BigInt,
    hi: BigInt,
    frac_bits: u32,
}

impl Log2Interval {
    /// The exact integer `k`.
    pub fn integer(k: i64, frac_bits: u32) -> Self {
        let v = BigInt::from(k) << frac_bits;
        Self {
            lo: v.clone(),
            hi: v,
            frac_bits,
        }
    }

    /// Encloses `log2(x)` for an integer `x >= 1`.
    pub fn log2_of(x: &BigUint, frac_bits: u32) -> Self {
        assert!(!x.is_zero(), "log2 of zero");
        let w = frac_bits + GUARD_BITS;
        let e = x.bits() - 1;
        let base = BigUint::one() << e;
        // x = 2^e * f with f in [1, 2); ln f = 2 atanh((x - 2^e) / (x + 2^e)).
        let (lf_lo, lf_hi) = two_atanh(&(x - &base), &(x + &base), w);
        let (l2_lo, l2_hi) = ln2(w);
        let (q_lo, q_hi) = div_bracket((&lf_lo, &lf_hi), (&l2_lo, &l2_hi), w);
        let int = BigInt::from(e) << w;
        Self::round_from(&(&int + q_lo), &(&int + q_hi), w, frac_bits)
    }

    /// Encloses `log2(num / den)` for positive integers.
    pub fn log2_of_ratio(num: &BigUint, den: &BigUint, frac_bits: u32) -> Self {
        Self::log2_of(num, frac_bits).sub(&Self::log2_of(den, frac_bits))
    }

    /// Encloses `tau * log2(1 - num/den)` for `0 <= num/den <= 1/2`.
    pub fn scaled_log2_one_minus(tau: &BigUint, num: &BigUint, den: &BigUint, frac_bits: u32) -> Self {
        assert!(BigUint::from(2u8) * num <= *den, "argument must be at most 1/2");
        if tau.is_zero() || num.is_zero() {
            return Self::integer(0, frac_bits);
        }
        // The sum is multiplied by tau, so carry enough bits to absorb it.
        let w = frac_bits + GUARD_BITS + tau.bits() as u32 + 8;
        let one = pow2(w);
        let (x_lo, x_hi) = fixed_bracket(num, den, w);
        let (mut p_lo, mut p_hi) = (x_lo.clone(), x_hi.clone());
        let (mut s_lo, mut s_hi) = (BigInt::zero(), BigInt::zero());
        let mut k: u64 = 1;
        loop {
            let div = BigInt::from(k);
            s_lo += floor_div(&p_lo, &div);
            s_hi += ceil_div(&p_hi, &div);
            p_lo = floor_div(&(&p_lo * &x_lo), &one);
            p_hi = ceil_div(&(&p_hi * &x_hi), &one);
            k += 1;
            if p_hi <= BigInt::one() {
                // Tail sum_{j>=k} x^j / j <= x^k / (1 - x) <= 2 x^k.
                s_hi += BigInt::from(2u8) * &p_hi + BigInt::one();
                break;
            }
        }
        // -ln(1 - x) in [s_lo, s_hi]; scale by tau and convert to base 2.
        let t = BigInt::from(tau.clone());
        let (l2_lo, l2_hi) = ln2(w);
        let (q_lo, q_hi) = div_bracket((&(&s_lo * &t), &(&s_hi * &t)), (&l2_lo, &l2_hi), w);
        Self::round_from(&-q_hi, &-q_lo, w, frac_bits)
    }

    fn round_from(lo: &BigInt, hi: &BigInt, from_bits: u32, to_bits: u32) -> Self {
        let scale = pow2(from_bits - to_bits);
        Self {
            lo: floor_div(lo, &scale),
            hi: ceil_div(hi, &scale),
            frac_bits: to_bits,
        }
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.frac_bits, other.frac_bits);
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            frac_bits: self.frac_bits,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.frac_bits, other.frac_bits);
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            frac_bits: self.frac_bits,
        }
    }

    /// Shifts the enclosed value by an exact integer.
    pub fn offset(&self, k: i64) -> Self {
        self.add(&Self::integer(k, self.frac_bits))
    }

    /// True when every point of `self` is `<=` every point of `other`.
    pub fn certainly_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    /// True when every point of `self` is `>` every point of `other`.
    pub fn certainly_gt(&self, other: &Self) -> bool {
        self.lo > other.hi
    }

    /// Width in units of `2^-frac_bits`.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn lower_f64(&self) -> f64 {
        fixed_to_f64(&self.lo, self.frac_bits)
    }

    pub fn upper_f64(&self) -> f64 {
        fixed_to_f64(&self.hi, self.frac_bits)
    }

    /// Decimal rendering of the endpoints, rounded outward.
    pub fn to_decimal(&self, digits: u32) -> LogBracket {
        LogBracket {
            lower: fixed_to_decimal(&self.lo, self.frac_bits, digits, false),
            upper: fixed_to_decimal(&self.hi, self.frac_bits, digits, true),
        }
    }
}

fn fixed_to_f64(v: &BigInt, bits: u32) -> f64 {
    let shift = bits.saturating_sub(60);
    let top = v >> shift;
    let t: f64 = num_traits::ToPrimitive::to_f64(&top).unwrap_or(f64::NAN);
    t / 2f64.powi((bits - shift) as i32)
}

/// `v / 2^bits` as a decimal with `digits` fractional digits, rounded down
/// (or up when `round_up`).
pub(crate) fn fixed_to_decimal(v: &BigInt, bits: u32, digits: u32, round_up: bool) -> String {
    let scaled = v * BigInt::from(10u8).pow(digits);
    let den = pow2(bits);
    let q = if round_up {
        ceil_div(&scaled, &den)
    } else {
        floor_div(&scaled, &den)
    };
    let neg = q.sign() == Sign::Minus;
    let mut s = q.abs().to_string();
    if s.len() <= digits as usize {
        s = "0".repeat(digits as usize + 1 - s.len()) + &s;
    }
    let (int, frac) = s.split_at(s.len() - digits as usize);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

/// Decimal endpoints of a [`Log2Interval`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogBracket {
    pub lower: String,
    pub upper: String,
}
