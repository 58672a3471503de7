//! Entropy-based approximations of the minimal row count.
//!
//! These are real-valued estimates, not certificates. The `b = floor(lambda m) + 1`
//! coupling is resolved by iterating `m <- m'(m)` until the step drops below 1.

use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{binomial, tau};
use crate::error::{domain, Error, Result};

const MAX_ITERATIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum AsymptoticKind {
    Std,
    Hp { epsilon: f64 },
    ElemStd,
    ElemHp { epsilon: f64 },
}

fn c<T: FromPrimitive>(x: f64) -> T {
    T::from_f64(x).expect("constant fits the scalar type")
}

/// Binary entropy `H2(x)`, with `H2(0) = H2(1) = 0`.
pub fn entropy2<T: Float>(x: T) -> T {
    if x <= T::zero() || x >= T::one() {
        return T::zero();
    }
    let y = T::one() - x;
    -(x * x.log2() + y * y.log2())
}

/// `phi(y) = (y - 1) / (y - r)`.
pub fn phi<T: Float>(y: T, r: T) -> T {
    (y - T::one()) / (y - r)
}

/// `log2` of a big integer, accurate to double precision.
pub fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map_or(f64::INFINITY, f64::log2);
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

/// Fixed-point estimate of the minimal `m` for `kind`.
pub fn asymptotic_m<T: Float + FromPrimitive>(kind: AsymptoticKind, n: u64, a: u64, b: u64) -> Result<T> {
    if b == 0 || a == 0 || a > n {
        return domain(format!("need 1 <= a <= n and b >= 1, got a = {a}, b = {b}, n = {n}"));
    }
    let t = tau(n, a)?;
    let ld_tau1 = c::<T>(log2_biguint(&(&t + 1u8)));
    let ld_e = c::<T>(std::f64::consts::LOG2_E);
    let tau_f = c::<T>(t.to_f64().unwrap_or(f64::INFINITY));
    let ld_n = c::<T>(log2_biguint(&binomial(n, a)));
    let bm1 = c::<T>((b - 1) as f64);
    let af = c::<T>(a as f64);
    let one = T::one();
    let two = c::<T>(2.0);
    let quad = af * af - af + two;

    // ld((eps/N)(1 - eps/N)) without forming eps/N in a narrow type.
    let ld_hp = |eps: f64| -> Result<T> {
        if !(eps > 0.0 && eps < 1.0) {
            return domain(format!("epsilon must lie in (0, 1), got {eps}"));
        }
        let ld_x = c::<T>(eps.log2()) - ld_n;
        let x = ld_x.exp2();
        Ok(ld_x + (-x).ln_1p() / c::<T>(std::f64::consts::LN_2))
    };

    let step = |m: T| -> Result<T> {
        let lambda = bm1 / m;
        if lambda >= c(0.5) {
            return domain(format!("lambda = (b-1)/m must stay below 1/2 (m = {:?})", m.to_f64()));
        }
        let h = entropy2(lambda);
        let tail = one - lambda / (one - lambda);
        Ok(match kind {
            AsymptoticKind::Std => (ld_e + ld_tau1 - tail.log2()) / (one - h),
            AsymptoticKind::Hp { epsilon } => (tail.log2() + tau_f * ld_hp(epsilon)?) / (h - one),
            AsymptoticKind::ElemStd | AsymptoticKind::ElemHp { .. } => {
                let y0 = (af * af + af + two) / quad;
                let r = m / (m - bm1);
                if y0 <= r {
                    return domain("ratio m/(m-b+1) must stay below (a^2+a+2)/(a^2-a+2)");
                }
                let f = phi(y0, r);
                let den = h + quad.log2() - (af + one);
                let lead = match kind {
                    AsymptoticKind::ElemStd => -(ld_e + ld_tau1 + f.log2()),
                    AsymptoticKind::ElemHp { epsilon } => tau_f * ld_hp(epsilon)? - f.log2(),
                    _ => unreachable!(),
                };
                (lead - bm1 * (two * af / quad).log2()) / den
            }
        })
    };

    // The first iterate must keep (b-1)/m below 1/2 and, for the elementary
    // forms, m/(m-b+1) below y0.
    let mut start = b.max(8).max(2 * b - 1) as f64;
    if matches!(kind, AsymptoticKind::ElemStd | AsymptoticKind::ElemHp { .. }) {
        let y0 = ((a * a + a + 2) as f64) / ((a * a - a + 2) as f64);
        start = start.max(((b - 1) as f64 * y0 / (y0 - 1.0)).floor() + 1.0);
    }
    let mut m = c::<T>(start);
    for _ in 0..MAX_ITERATIONS {
        let next = step(m)?;
        if !next.is_finite() || next <= T::zero() {
            return Err(Error::NonConvergent(format!("iterate left the domain: {:?}", next.to_f64())));
        }
        if (next - m).abs() < one {
            return Ok(next);
        }
        m = next;
    }
    Err(Error::NonConvergent(format!("no fixed point after {MAX_ITERATIONS} iterations")))
}

/// `C(r, floor(alpha r)) / (1 - alpha/(1 - alpha)) + b - 2^(floor(alpha r) - 1)`.
pub fn asymptotic_constructive<T: Float + FromPrimitive>(r: u64, alpha: T, b: u64) -> Result<T> {
    if !(alpha > T::zero() && alpha < c(0.5)) {
        return domain("alpha must lie in (0, 1/2)");
    }
    let a = (alpha * c::<T>(r as f64)).floor().to_u64().unwrap_or(0);
    if a == 0 {
        return domain("floor(alpha r) must be at least 1");
    }
    let lead = c::<T>(log2_biguint(&binomial(r, a))).exp2();
    let one = T::one();
    Ok(lead / (one - alpha / (one - alpha)) + c::<T>(b as f64) - c::<T>(2.0).powi(a as i32 - 1))
}
