use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_budget, verify_free, VerifyOutcome};
use crate::codes::LinearCode;
use crate::error::{domain, Result};
use crate::gf2::{BitMatrix, BitVector};

#[derive(Debug, Clone, Serialize)]
pub struct AttemptRecord {
    pub attempt: usize,
    pub violations: u64,
    pub min_positive_b: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleOutcome {
    /// Full-rank matrix: the `m` sampled rows followed by basis rows.
    #[serde(skip)]
    pub matrix: Option<BitMatrix>,
    pub success: bool,
    pub attempts: usize,
    pub sampled_rows: usize,
    pub appended_rows: usize,
    /// Largest minimum positive `b` over all attempts.
    pub best_min_b: Option<usize>,
    pub verification: Option<VerifyOutcome>,
    pub log: Vec<AttemptRecord>,
}

/// Draws `m` uniform dual codewords per attempt until the matrix has no
/// `(a, s)` sets with `1 <= s < b`, then pads it to rank `n - k`.
///
/// The RNG is ChaCha8 seeded from `seed`; attempts run in sequence, so the
/// same arguments always give the same matrix.
#[allow(clippy::too_many_arguments)]
pub fn sample_lll_matrix(
    code: &LinearCode,
    m: usize,
    a: usize,
    b: usize,
    elementary_only: bool,
    max_attempts: usize,
    seed: u64,
    budget: u64,
) -> Result<SampleOutcome> {
    if b == 0 || m < b {
        return domain(format!("need m >= b >= 1, got m = {m}, b = {b}"));
    }
    if max_attempts == 0 {
        return domain("max_attempts must be positive");
    }
    check_budget(&BitMatrix::zeros(m, code.n), a, budget)?;
    let (basis_rows, _) = code.h.rref();
    let basis = BitMatrix::from_rows(code.n, basis_rows)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Vec::new();
    let mut best: Option<usize> = None;
    for attempt in 1..=max_attempts {
        let rows: Vec<BitVector> = (0..m).map(|_| basis.sample_span(&mut rng)).collect();
        let sampled = BitMatrix::from_rows(code.n, rows)?;
        let v = verify_free(&sampled, a, b, elementary_only, budget)?;
        log.push(AttemptRecord {
            attempt,
            violations: v.violations,
            min_positive_b: v.min_positive_b,
        });
        if let Some(x) = v.min_positive_b {
            best = Some(best.map_or(x, |y| y.max(x)));
        }
        if v.pass {
            let ext = sampled.extend_to_full_rank(&basis)?;
            return Ok(SampleOutcome {
                matrix: Some(ext.matrix),
                success: true,
                attempts: attempt,
                sampled_rows: m,
                appended_rows: ext.appended,
                best_min_b: best,
                verification: Some(v),
                log,
            });
        }
    }
    Ok(SampleOutcome {
        matrix: None,
        success: false,
        attempts: max_attempts,
        sampled_rows: m,
        appended_rows: 0,
        best_min_b: best,
        verification: None,
        log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{golay24, repetition};
    use crate::trapping::DEFAULT_BUDGET;

    #[test]
    fn preconditions() {
        let c = golay24();
        assert!(sample_lll_matrix(&c, 0, 3, 1, false, 10, 0, DEFAULT_BUDGET).is_err());
        assert!(sample_lll_matrix(&c, 3, 3, 4, false, 10, 0, DEFAULT_BUDGET).is_err());
        assert!(sample_lll_matrix(&c, 15, 12, 2, false, 10, 0, 1000).is_err());
    }

    #[test]
    fn repetition_reaches_full_rank() {
        let c = repetition(4).unwrap();
        let out = sample_lll_matrix(&c, 8, 1, 2, false, 200, 7, DEFAULT_BUDGET).unwrap();
        assert!(out.success);
        let h = out.matrix.unwrap();
        assert_eq!(h.rank(), 3);
        assert!(h.nrows() <= 8 + 3);
        assert!(verify_free(&h, 1, 2, false, DEFAULT_BUDGET).unwrap().pass);
    }

    #[test]
    fn deterministic_per_seed() {
        let c = golay24();
        let x = sample_lll_matrix(&c, 15, 3, 2, false, 100, 3, DEFAULT_BUDGET).unwrap();
        let y = sample_lll_matrix(&c, 15, 3, 2, false, 100, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(x.matrix, y.matrix);
        assert_eq!(x.attempts, y.attempts);
    }
}
