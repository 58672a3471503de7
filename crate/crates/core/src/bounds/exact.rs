//! Rational brackets for Euler's number and exact sums.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `e` enclosed as `[lo_num / den, hi_num / den]` from the first `terms`
/// terms of `sum 1/k!`, with the tail bounded by `2 / terms!`.
#[derive(Debug, Clone)]
pub struct EBracket {
    pub lo_num: BigUint,
    pub hi_num: BigUint,
    pub den: BigUint,
    pub terms: u32,
}

impl EBracket {
    pub fn with_terms(terms: u32) -> Self {
        assert!(terms >= 2);
        // sum_{k<K} 1/k! = P / (K-1)!, P = sum_{k<K} (K-1)!/k!
        let last = terms - 1;
        let mut p = BigUint::zero();
        let mut falling = BigUint::one();
        for k in (0..=last).rev() {
            p += &falling;
            if k > 0 {
                falling *= k;
            }
        }
        let fact_last = falling; // (K-1)!
        // Tail sum_{k>=K} 1/k! < 2/K!; common denominator K!.
        let den = &fact_last * terms;
        let lo_num = &p * terms;
        let hi_num = &lo_num + 2u32;
        Self {
            lo_num,
            hi_num,
            den,
            terms,
        }
    }

    /// Smallest bracket whose width is below `10^-digits`.
    pub fn with_width_digits(digits: u32) -> Self {
        let target = BigUint::from(10u8).pow(digits);
        let mut terms = 2;
        loop {
            let b = Self::with_terms(terms);
            if &target * 2u32 < b.den {
                return b;
            }
            terms += 1;
        }
    }

    pub fn refined(&self) -> Self {
        Self::with_terms(self.terms * 2)
    }

    pub fn width_upper(&self) -> (BigUint, BigUint) {
        (BigUint::from(2u8), self.den.clone())
    }
}

/// `num / den` as a reduced `"p/q"` string.
pub fn rational_string(num: &BigUint, den: &BigUint) -> String {
    let g = num.gcd(den);
    if g.is_zero() {
        return format!("{num}/{den}");
    }
    format!("{}/{}", num / &g, den / &g)
}

/// `num / den` rounded to `sig` significant digits in scientific notation.
pub fn rational_sci(num: &BigUint, den: &BigUint, sig: usize) -> String {
    if num.is_zero() {
        return "0".into();
    }
    // Scale so the quotient has at least `sig` digits.
    let mut exp10: i64 = num.to_string().len() as i64 - den.to_string().len() as i64 - sig as i64 - 1;
    let q = loop {
        let (n, d) = if exp10 >= 0 {
            (num.clone(), den * BigUint::from(10u8).pow(exp10 as u32))
        } else {
            (num * BigUint::from(10u8).pow((-exp10) as u32), den.clone())
        };
        let q = n / d;
        if q.to_string().len() > sig {
            break q;
        }
        exp10 -= 1;
    };
    let digits = q.to_string();
    let extra = digits.len() - sig;
    let mantissa = &digits[..sig];
    let e = exp10 + extra as i64 + sig as i64 - 1;
    format!("{}.{}e{}", &mantissa[..1], &mantissa[1..], e)
}
