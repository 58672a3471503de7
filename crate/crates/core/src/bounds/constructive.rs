use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::binomial;
use crate::error::{domain, Result};

/// Which closed-form row count to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Constructive {
    /// All combinations of at most `t` rows; requires
    /// `b >= 2^(a-1) - sum_{j=t+1}^{a} C(r, j)`.
    Truncated { t: u64 },
    /// `sum_{i<=a} C(r,i) + b - 2^(a-1)`.
    General,
    /// All single rows and pairwise sums: `r(r+1)/2`.
    Pairwise,
    /// `sum_{i<=a} C(r,i)` for elementary sets.
    Elementary,
    /// `b * r` for elementary sets.
    ElementaryRefined,
}

fn partial_sum(r: u64, lo: u64, hi: u64) -> BigUint {
    (lo..=hi).map(|i| binomial(r, i)).sum()
}

/// Row count of the combination matrix construction for a basis of `r` rows.
pub fn constructive_bound(r: u64, a: u64, b: u64, kind: Constructive) -> Result<BigUint> {
    if r <= 2 {
        return domain(format!("need r > 2, got r = {r}"));
    }
    if a == 0 {
        return domain("a must be at least 1");
    }
    let pow = BigUint::from(1u8) << (a - 1);
    Ok(match kind {
        Constructive::Truncated { t } => {
            if t == 0 || t > a {
                return domain(format!("need 1 <= t <= a, got t = {t}, a = {a}"));
            }
            let rest = partial_sum(r, t + 1, a);
            if rest < pow && BigUint::from(b) < &pow - &rest {
                return domain(format!(
                    "b = {b} is below 2^(a-1) - sum_{{j>t}} C(r,j) = {}",
                    &pow - &rest
                ));
            }
            partial_sum(r, 1, t)
        }
        Constructive::General => {
            let total = partial_sum(r, 1, a) + BigUint::from(b);
            if total < pow {
                return domain("bound would be negative");
            }
            total - pow
        }
        Constructive::Pairwise => BigUint::from(r) * (r + 1) / 2u8,
        Constructive::Elementary => partial_sum(r, 1, a),
        Constructive::ElementaryRefined => {
            let v = BigUint::from(b) * r;
            if v.is_zero() {
                return domain("b must be at least 1");
            }
            v
        }
    })
}

/// Row count after padding `m` sampled rows to rank `n - k`.
pub fn trapping_redundancy_upper(m: u64, n: u64, k: u64) -> Result<u64> {
    if k >= n {
        return domain(format!("need n > k, got n = {n}, k = {k}"));
    }
    Ok(m + n - k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let v = |r, a, b, k| constructive_bound(r, a, b, k).unwrap();
        assert_eq!(v(3, 2, 2, Constructive::Truncated { t: 2 }), BigUint::from(6u8));
        assert_eq!(v(3, 2, 2, Constructive::General), BigUint::from(6u8));
        assert_eq!(v(12, 3, 1, Constructive::Pairwise), BigUint::from(78u8));
        assert_eq!(v(12, 3, 5, Constructive::ElementaryRefined), BigUint::from(60u8));
        assert_eq!(v(12, 2, 1, Constructive::Elementary), BigUint::from(78u8));
    }

    #[test]
    fn truncated_requires_large_b() {
        // r=12, a=3, t=1: 2^2 - C(12,2) - C(12,3) < 0, any b works.
        assert!(constructive_bound(12, 3, 1, Constructive::Truncated { t: 1 }).is_ok());
        // r=3, a=3, t=2: 4 - C(3,3) = 3, so b = 2 is refused.
        assert!(constructive_bound(3, 3, 2, Constructive::Truncated { t: 2 }).is_err());
        assert!(constructive_bound(3, 3, 3, Constructive::Truncated { t: 2 }).is_ok());
        assert!(constructive_bound(2, 1, 1, Constructive::Pairwise).is_err());
    }

    #[test]
    fn upper_redundancy() {
        assert_eq!(trapping_redundancy_upper(75, 2640, 1320).unwrap(), 1394);
        assert_eq!(trapping_redundancy_upper(80, 273, 191).unwrap(), 161);
        assert_eq!(trapping_redundancy_upper(9, 10, 9).unwrap(), 9);
        assert!(trapping_redundancy_upper(1, 5, 5).is_err());
    }
}
