//! The normalised polylogarithm `H_n(x) = Σ_{k≥0} x^k/(k+1)^n = Li_n(x)/x`.
//!
//! Near `x = 1` the power series converges far too slowly for direct
//! summation, so `Li_n` is expanded in `μ = log x` instead; negative
//! arguments are folded back onto `(0, 1]` by the duplication formula.

use super::special::{zeta_integer, zeta_real};
use crate::error::{domain, Result};

/// `H_n(x)` for `|x| ≤ 1` (and `x < 1` when `n ≤ 1`), absolute error ~1e-15.
pub fn polylog_h(n: u32, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return domain(format!("polylog_h needs |x| <= 1, got {x}"));
    }
    match n {
        0 => {
            if x >= 1.0 {
                return domain("H_0(x) = 1/(1-x) needs x < 1");
            }
            Ok(1.0 / (1.0 - x))
        }
        1 => {
            if x >= 1.0 {
                return domain("H_1 diverges at x = 1");
            }
            if x.abs() < 1e-8 {
                return Ok(1.0 + x / 2.0 + x * x / 3.0);
            }
            Ok(-(-x).ln_1p() / x)
        }
        _ => {
            if x == 0.0 {
                return Ok(1.0);
            }
            if x.abs() <= 0.5 {
                return Ok(direct_series(n, x));
            }
            Ok(li(n, x) / x)
        }
    }
}

/// Σ x^k/(k+1)^n for |x| ≤ 1/2; remainder after K terms is below |x|^K/(1−|x|).
fn direct_series(n: u32, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut p = 1.0;
    for k in 0..200 {
        sum += p / ((k + 1) as f64).powi(n as i32);
        p *= x;
        if p.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// `Li_n(x)` for `n ≥ 2` and `|x| ≤ 1`.
fn li(n: u32, x: f64) -> f64 {
    if x.abs() <= 0.5 {
        return x * direct_series(n, x);
    }
    if x < 0.0 {
        // Li_n(−y) = 2^{1−n} Li_n(y²) − Li_n(y)
        let y = -x;
        return 2f64.powi(1 - n as i32) * li(n, y * y) - li(n, y);
    }
    if x == 1.0 {
        return zeta_real(n as f64).expect("n >= 2");
    }
    log_series(n, x)
}

/// `Li_n(e^μ) = Σ_{k≠n−1} ζ(n−k) μ^k/k! + μ^{n−1}/(n−1)! · (H_{n−1} − log(−μ))`
/// for `μ < 0`; converges for `|μ| < 2π`, used here with `|μ| ≤ log 4`.
fn log_series(n: u32, x: f64) -> f64 {
    let mu = x.ln();
    let n = n as i64;
    let harmonic: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
    let mut sum = 0.0;
    let mut pow = 1.0; // μ^k / k!
    let mut prev_term = f64::INFINITY;
    let mut k: i64 = 0;
    loop {
        let term = if k == n - 1 {
            pow * (harmonic - (-mu).ln())
        } else {
            zeta_integer(n - k) * pow
        };
        sum += term;
        // Beyond k = n every other coefficient vanishes and the rest shrink
        // like (|μ|/2π)^k, so two small terms in a row end the sum.
        if k > n + 1 && term.abs().max(prev_term.abs()) < 1e-18 {
            break;
        }
        if k > n + 200 {
            break;
        }
        prev_term = term;
        k += 1;
        pow *= mu / k as f64;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    // Brute-force oracle: partial sums plus the geometric remainder bound.
    fn brute(n: u32, x: f64) -> f64 {
        let mut s = 0.0;
        let mut p = 1.0;
        for k in 0..20_000 {
            s += p / ((k + 1) as f64).powi(n as i32);
            p *= x;
        }
        s
    }

    #[test]
    fn h0_is_geometric() {
        assert_eq!(polylog_h(0, 0.5).unwrap(), 2.0);
    }

    #[test]
    fn value_at_zero_is_one() {
        for n in 0..8 {
            assert_eq!(polylog_h(n, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn h2_at_one_is_zeta2() {
        assert!((polylog_h(2, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn h2_at_minus_one() {
        assert!((polylog_h(2, -1.0).unwrap() - PI * PI / 12.0).abs() < 1e-14);
    }

    #[test]
    fn matches_brute_force_near_one() {
        for n in 2..7 {
            for x in [0.51, 0.7, 0.9, 0.97, -0.6, -0.8, -0.95, 0.3, -0.4] {
                let v = polylog_h(n, x).unwrap();
                let b = brute(n, x);
                assert!((v - b).abs() < 1e-14, "n={n} x={x}: {v} vs {b}");
            }
        }
    }

    #[test]
    fn dilog_reflection() {
        // Li_2(x) + Li_2(1−x) = π²/6 − log x log(1−x)
        for x in [0.2, 0.45, 0.6, 0.83] {
            let lhs = x * polylog_h(2, x).unwrap() + (1.0 - x) * polylog_h(2, 1.0 - x).unwrap();
            let rhs = PI * PI / 6.0 - x.ln() * (1.0 - x).ln();
            assert!((lhs - rhs).abs() < 1e-14);
        }
    }

    #[test]
    fn at_one_decreases_to_one() {
        let mut prev = f64::INFINITY;
        for n in 2..60 {
            let v = polylog_h(n, 1.0).unwrap();
            // ζ(n) − 1 ~ 2^{-n} drops below an ulp of 1 around n = 53
            assert!(v <= prev && v >= 1.0);
            if n < 50 {
                assert!(v < prev && v > 1.0);
            }
            assert!((v - zeta_real(n as f64).unwrap()).abs() < 1e-10);
            prev = v;
        }
        assert!(prev - 1.0 < 1e-15);
    }

    #[test]
    fn continuous_across_branch_switch() {
        for n in 2..6 {
            let a = polylog_h(n, 0.5).unwrap();
            let b = polylog_h(n, 0.5 + 1e-12).unwrap();
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(polylog_h(0, 1.0).is_err());
        assert!(polylog_h(1, 1.0).is_err());
        assert!(polylog_h(3, 1.5).is_err());
        assert!(polylog_h(3, f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn h1_closed_form(x in 0.001f64..0.999) {
            let v = polylog_h(1, x).unwrap();
            let b = brute(1, x);
            // the brute oracle only converges well away from 1
            if x < 0.99 {
                prop_assert!((v - b).abs() < 1e-12);
            }
            prop_assert!((v + (1.0 - x).ln() / x).abs() < 1e-12);
        }

        #[test]
        fn bounded_by_value_at_one(n in 2u32..8, x in -1.0f64..1.0) {
            let v = polylog_h(n, x).unwrap();
            prop_assert!(v.abs() <= polylog_h(n, 1.0).unwrap() + 1e-15);
        }
    }
}
