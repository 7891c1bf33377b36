//! Direct evaluation of `S_{n,α}(t)` and the constants `δ_{n,α}`.
//!
//! For `n ≥ 0`,
//! `S_{n,α}(t) = −(1/π) Im{ (iⁿ/n!) ∫_α^∞ (σ−α)ⁿ ζ′/ζ(σ+it) dσ }`,
//! and `S_{−1,α}(t) = (1/π) Re ζ′/ζ(α+it)`.

use std::cell::RefCell;
use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::zeta::{logderiv_fast, zeta, zeta_logderiv_with_error, zeta_real_positive, zeta_with_derivative};
use crate::error::{Error, Result};
use crate::numkit::{integrate, QuadOptions, EULER_GAMMA};

/// Absolute tolerance for [`s_n_direct`].
pub const DEFAULT_SN_TOL: f64 = 1e-9;

// ζ(s) = 1/(s−1) + γ − γ₁(s−1) + (γ₂/2)(s−1)² + …
const STIELTJES_1: f64 = -0.072_815_845_483_676_72;
const STIELTJES_2: f64 = -0.009_690_363_192_872_318;

/// How an `S_{n,α}(t)` value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SnMethod {
    /// Quadrature of ζ′/ζ along the horizontal ray.
    Direct,
    /// Sum over zero ordinates (representation formula).
    ZeroSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SnValue {
    pub n: i32,
    pub alpha: f64,
    pub t: f64,
    pub value: f64,
    pub method: SnMethod,
    pub est_error: f64,
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// `∫_Σ^∞ (σ−α)^n/n! · 2^{−σ} dσ`.
fn weighted_exp2_tail(n: u32, alpha: f64, big_sigma: f64) -> f64 {
    let d = big_sigma - alpha;
    let mut total = 0.0;
    for j in 0..=n {
        total += d.powi((n - j) as i32) / factorial(n - j) / LN_2.powi(j as i32 + 1);
    }
    total * 2f64.powf(-big_sigma)
}

/// Truncation point for `∫(σ−α)ⁿ/n!·|ζ′/ζ(σ+it)|`; uses
/// `|ζ′/ζ(σ+it)| ≤ −ζ′/ζ(σ) ≤ 0.872·2^{−σ}·… ` valid for `σ ≥ 10`.
fn sigma_cutoff(n: u32, alpha: f64, tol: f64, scale: f64) -> (f64, f64) {
    let mut s = 10.0f64.max(alpha + 2.0);
    loop {
        let tail = scale * weighted_exp2_tail(n, alpha, s);
        if tail <= tol || s > 2000.0 {
            return (s, tail);
        }
        s += 2.0;
    }
}

fn check_args(n: i32, alpha: f64, t: f64) -> Result<()> {
    if n < -1 {
        return Err(Error::Domain(format!("n must be at least -1, got {n}")));
    }
    if !(alpha >= 0.5) || !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha must be at least 1/2, got {alpha}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    Ok(())
}

/// `S_{n,α}(t)` at the default tolerance.
pub fn s_n_direct(n: i32, alpha: f64, t: f64) -> Result<SnValue> {
    s_n_direct_tol(n, alpha, t, DEFAULT_SN_TOL)
}

/// `S_{n,α}(t)` to absolute tolerance `tol`.
///
/// `α` is normally in `[½, 1]`; larger values are accepted (the integral
/// formula holds there unconditionally). For `n = 0`, `α = ½` and `t` on a
/// zero ordinate the two-sided average at `t ± 1e-6` is returned.
pub fn s_n_direct_tol(n: i32, alpha: f64, t: f64, tol: f64) -> Result<SnValue> {
    check_args(n, alpha, t)?;
    let zt = (0.01 * tol).max(1e-14);
    if n == -1 {
        let (v, e) = zeta_logderiv_with_error(Complex64::new(alpha, t), zt)?;
        return Ok(SnValue {
            n,
            alpha,
            t,
            value: v.re / PI,
            method: SnMethod::Direct,
            est_error: e / PI,
        });
    }
    if n == 0 && alpha == 0.5 {
        let z = zeta_with_derivative(Complex64::new(alpha, t), 1e-14)?;
        if z.value.norm() < 1e-6 * z.deriv.norm() {
            let a = ray_integral(0, alpha, t - 1e-6, tol)?;
            let b = ray_integral(0, alpha, t + 1e-6, tol)?;
            return Ok(SnValue {
                n,
                alpha,
                t,
                value: 0.5 * (a.0 + b.0),
                method: SnMethod::Direct,
                est_error: 0.5 * (a.1 + b.1),
            });
        }
    }
    let (value, est_error) = ray_integral(n as u32, alpha, t, tol)?;
    Ok(SnValue {
        n,
        alpha,
        t,
        value,
        method: SnMethod::Direct,
        est_error,
    })
}

fn ray_integral(n: u32, alpha: f64, t: f64, tol: f64) -> Result<(f64, f64)> {
    let zt = (0.01 * tol).max(1e-14);
    // 0.872·2^{−σ} majorises −ζ′/ζ(σ) for σ ≥ 10.
    let (smax, tail) = sigma_cutoff(n, alpha, 0.25 * tol, 0.872 / PI);
    let nf = factorial(n);
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let integrand = |sigma: f64| -> f64 {
        let w = (sigma - alpha).powi(n as i32) / nf;
        match logderiv_fast(Complex64::new(sigma, t), zt) {
            Ok((v, _)) => w * if n.is_multiple_of(2) { v.im } else { v.re },
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let mut edges = vec![alpha];
    for p in [1.0, alpha + 0.25, alpha + 1.0, 3.0, 5.0, 8.0, 13.0, 21.0] {
        if p > alpha && p < smax && (p != 1.0 || t < 2.0) {
            edges.push(p);
        }
    }
    edges.push(smax);
    edges.sort_by(f64::total_cmp);
    edges.dedup();
    let share = 0.5 * tol * PI / (edges.len() - 1) as f64;
    let mut total = 0.0;
    let mut qerr = 0.0;
    let opts = QuadOptions {
        tol: share,
        max_intervals: 20_000,
    };
    for w in edges.windows(2) {
        let r = integrate(integrand, w[0], w[1], &opts)?;
        total += r.value;
        qerr += r.err;
    }
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    // iⁿ rotates the real/imaginary part selected above.
    let sign = match n % 4 {
        0 | 1 => -1.0,
        _ => 1.0,
    };
    Ok((sign * total / PI, qerr / PI + tail))
}

/// `S_{0,α}(t)` by continuous variation of `arg ζ` from `2 + it` leftward
/// to `α + it`, with steps halved until each change is below `π/2`.
pub fn s0_by_argument(alpha: f64, t: f64) -> Result<f64> {
    check_args(0, alpha, t)?;
    // Re ζ(2+iτ) ≥ 2 − ζ(2) > 0, so the principal value is continuous up
    // the segment from 2 to 2+it.
    let tol = 1e-13;
    let mut z = zeta(Complex64::new(2.0, t), tol)?;
    let mut arg = z.arg();
    let mut sigma = 2.0;
    let mut h = 0.05;
    while sigma > alpha {
        let next = (sigma - h).max(alpha);
        let zn = zeta(Complex64::new(next, t), tol)?;
        if zn.norm() < 1e-12 {
            return Err(Error::Conditioning(format!("zeta vanishes at {next} + {t}i")));
        }
        let d = (zn / z).arg();
        if d.abs() >= 0.5 * PI {
            h *= 0.5;
            if h < 1e-12 {
                return Err(Error::Conditioning(format!(
                    "argument tracking stalled near {sigma} + {t}i"
                )));
            }
            continue;
        }
        arg += d;
        sigma = next;
        z = zn;
        if d.abs() < 0.1 * PI {
            h = (h * 2.0).min(0.05);
        }
    }
    Ok(arg / PI)
}

/// `log |ζ(σ)|` on `σ > 0`, with the Laurent expansion near the pole.
fn log_abs_zeta(sigma: f64) -> Result<f64> {
    let d = sigma - 1.0;
    if d.abs() < 1e-3 {
        let reg = 1.0 + EULER_GAMMA * d - STIELTJES_1 * d * d + 0.5 * STIELTJES_2 * d * d * d;
        return Ok(reg.abs().ln() - d.abs().ln());
    }
    Ok(zeta_real_positive(sigma)?.abs().ln())
}

/// The constant `δ_{n,α}` in `S_{n,α}(t) = ∫_0^t S_{n−1,α} + δ_{n,α}`.
///
/// Even `n = 2k`: `(−1)^{k−1}(1−α)^{2k}/(2k)!`. Odd `n = 2k−1`: the
/// `(2k−1)`-fold iterated integral of `log|ζ|`, collapsed by Cauchy's
/// repeated-integration formula to
/// `((−1)^{k−1}/π) ∫_α^∞ (σ−α)^{2k−2}/(2k−2)! · log|ζ(σ)| dσ`.
pub fn delta_const(n: i32, alpha: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain(format!("delta is defined for n >= 1, got {n}")));
    }
    if !(alpha >= 0.5) || !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha must be at least 1/2, got {alpha}")));
    }
    let k = (n + 1) / 2;
    let sgn = if k % 2 == 1 { 1.0 } else { -1.0 };
    if n % 2 == 0 {
        let two_k = 2 * k as u32;
        return Ok(sgn * (1.0 - alpha).powi(two_k as i32) / factorial(two_k));
    }
    let m = (2 * k - 2) as u32;
    let mf = factorial(m);
    let tol = 1e-13;
    // log ζ(σ) ≤ ζ(σ) − 1 ≤ 1.1·2^{−σ} for σ ≥ 10.
    let (smax, tail) = sigma_cutoff(m, alpha, 0.1 * tol, 1.1);
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let f = |s: f64| match log_abs_zeta(s) {
        Ok(v) => (s - alpha).powi(m as i32) / mf * v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            0.0
        }
    };
    let mut edges = vec![alpha];
    for p in [1.0, 2.0, 4.0] {
        if p > alpha && p < smax {
            edges.push(p);
        }
    }
    edges.push(smax);
    let opts = QuadOptions {
        tol,
        max_intervals: 20_000,
    };
    let mut total = 0.0;
    for w in edges.windows(2) {
        total += integrate(f, w[0], w[1], &opts)?.value;
    }
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let _ = tail;
    Ok(sgn * total / PI)
}
