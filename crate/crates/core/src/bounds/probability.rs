use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{elementary_tail_sum, odd_tail_sum};
use crate::error::{domain, Result};

/// Scalar types a probability can be reported in.
pub trait Probability: Clone + PartialOrd + std::fmt::Debug {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self;
}

pub(crate) fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
        .to_f64()
        .unwrap_or(f64::NAN)
}

impl Probability for f64 {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        ratio_to_f64(num, den)
    }
}

impl Probability for f32 {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        ratio_to_f64(num, den) as f32
    }
}

impl Probability for BigRational {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
    }
}

/// Probability that a fixed `a`-set has fewer than `b` odd rows among `m`
/// random dual codewords, assuming the dual is an orthogonal array of
/// strength at least `a`. With `elementary`, the event also requires every
/// row of the restriction to have weight at most 2.
pub fn p_event<T: Probability>(m: u64, a: u64, b: u64, elementary: bool) -> Result<T> {
    if b > m {
        return domain(format!("need b <= m, got b = {b}, m = {m}"));
    }
    if a == 0 {
        return domain("a must be at least 1");
    }
    let (num, exp) = if elementary {
        (elementary_tail_sum(m, a, b), (a + 1) * m)
    } else {
        (odd_tail_sum(m, b), m)
    };
    Ok(T::from_ratio(&num, &(BigUint::from(1u8) << exp)))
}
