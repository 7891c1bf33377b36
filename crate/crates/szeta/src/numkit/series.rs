//! Infinite sums with caller-supplied remainder bounds.

use super::mangoldt::neumaier;
use crate::error::{Error, Result};

/// Default cap on the number of terms `sum_tail_bounded` will add.
pub const DEFAULT_TERM_CAP: usize = 10_000_000;

/// A truncated series together with the bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub tail_bound: f64,
    pub terms_used: usize,
}

/// Sum `term(0) + term(1) + …`, stopping at the first `K ≥ 1` with
/// `tail_bound(K) ≤ tol`, where `tail_bound(K)` must majorise
/// `|Σ_{k≥K} term(k)|`.
pub fn sum_tail_bounded<T, B>(term: T, tail_bound: B, tol: f64) -> Result<SeriesResult>
where
    T: Fn(usize) -> f64,
    B: Fn(usize) -> f64,
{
    sum_tail_bounded_capped(term, tail_bound, tol, DEFAULT_TERM_CAP)
}

pub fn sum_tail_bounded_capped<T, B>(term: T, tail_bound: B, tol: f64, cap: usize) -> Result<SeriesResult>
where
    T: Fn(usize) -> f64,
    B: Fn(usize) -> f64,
{
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 0..cap {
        let x = term(k);
        // Neumaier step
        let t = sum + x;
        comp += if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
        sum = t;
        let bound = tail_bound(k + 1);
        if bound <= tol {
            return Ok(SeriesResult {
                value: sum + comp,
                tail_bound: bound.max(0.0),
                terms_used: k + 1,
            });
        }
    }
    Err(Error::Accuracy {
        msg: format!("series tail still above {tol:e} after {cap} terms"),
        best: sum + comp,
        err: tail_bound(cap),
    })
}

/// Pairwise summation with a fixed reduction tree, for reproducible totals.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 16 {
        return neumaier(xs.iter().copied());
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn geometric() {
        let r = sum_tail_bounded(|k| 0.5f64.powi(k as i32), |k| 2.0 * 0.5f64.powi(k as i32), 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        assert!(r.tail_bound <= 1e-12);
    }

    #[test]
    fn zero_series() {
        let r = sum_tail_bounded(|_| 0.0, |_| 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.tail_bound, 0.0);
        assert_eq!(r.terms_used, 1);
    }

    #[test]
    fn power_saving_geometric_bound() {
        let (alpha, x) = (0.75_f64, (2.0 * PI).exp());
        let q = x.powf(-(alpha - 0.5));
        let r = sum_tail_bounded(|k| q.powi(k as i32 + 1), |k| q.powi(k as i32 + 1) / (1.0 - q), 1e-14).unwrap();
        assert!(r.value <= 1.0 / ((alpha - 0.5) * x.ln()));
    }

    #[test]
    fn cap_reports_accuracy_error() {
        let r = sum_tail_bounded_capped(|k| 1.0 / ((k + 1) as f64).powi(2), |k| 1.0 / k as f64, 1e-12, 1000);
        match r {
            Err(Error::Accuracy { best, err, .. }) => {
                assert!((best - PI * PI / 6.0).abs() < 2e-3);
                assert!((err - 1e-3).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pairwise_is_order_fixed() {
        let xs: Vec<f64> = (0..1000).map(|k| ((k * 7919) % 1000) as f64 * 1e-3).collect();
        assert_eq!(pairwise_sum(&xs), pairwise_sum(&xs));
        assert!((pairwise_sum(&xs) - 499.5).abs() < 1e-10);
    }
}
