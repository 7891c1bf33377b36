//! Both sides of the Guinand–Weil explicit formula for translated extremal
//! kernels `h(w) = k(t − w)`:
//!
//! ```text
//! Σ_γ h(γ) = h(i/2) + h(−i/2) − ĥ(0) log π/(2π)
//!          + (1/2π)∫ h(u) Re ψ(¼ + iu/2) du
//!          − (1/π) Σ_n Λ(n) n^{−½} k̂(log n/2π) cos(t log n)
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::kernel::{Kernel, KernelSpec};
use super::zero_sums::{symmetric_zero_sum, zero_tail_bound};
use crate::error::{Error, Result};
use crate::numkit::{integrate, pairwise_sum, quad_pieces, MangoldtTable, QuadOptions};
use crate::zeta_core::ZeroTable;
use crate::Sign;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GwReport {
    pub t: f64,
    pub delta: f64,
    pub kernel: KernelSpec,
    pub sign: Sign,
    pub zero_side: f64,
    pub zero_tail_bound: f64,
    /// `h(i/2) + h(−i/2)`
    pub arch_terms: f64,
    pub gamma_integral: f64,
    pub log_pi_term: f64,
    pub prime_sum: f64,
    pub prime_tail_bound: f64,
    pub residual: f64,
}

impl GwReport {
    /// Whether `|residual|` is inside the truncation bounds plus `slack`.
    pub fn within(&self, slack: f64) -> bool {
        self.residual.abs() <= self.zero_tail_bound + self.prime_tail_bound + slack
    }
}

/// Largest `n` whose `k̂(log n/2π)` can be nonzero.
pub fn prime_support(delta: f64) -> f64 {
    (2.0 * PI * delta).exp()
}

/// `(1/π) Σ_{2≤n≤e^{2πΔ}} Λ(n) n^{−½} k̂(log n/2π) cos(t log n)`, exact
/// finite sum.
pub fn prime_sum<F: Fn(f64) -> Result<f64>>(kernel_ft: F, t: f64, delta: f64, table: &MangoldtTable) -> Result<f64> {
    let x = prime_support(delta);
    check_table(x, table)?;
    let mut parts = Vec::new();
    for (n, lam) in table.prime_powers(x) {
        let ln = (n as f64).ln();
        let w = kernel_ft(ln / (2.0 * PI))?;
        if w != 0.0 {
            parts.push(lam / (n as f64).sqrt() * w * (t * ln).cos());
        }
    }
    Ok(pairwise_sum(&parts) / PI)
}

fn check_table(x: f64, table: &MangoldtTable) -> Result<()> {
    if (table.limit() as f64) < x.floor() {
        return Err(Error::Resource {
            what: "von Mangoldt table for the prime sum",
            requested: x.ceil() as u64,
            limit: table.limit(),
        });
    }
    Ok(())
}

/// `(1/π) Σ_{n≤e^{2πΔ}} Λ(n)/√n`, the weight multiplying per-term FT errors.
fn prime_weight(delta: f64, table: &MangoldtTable) -> f64 {
    let parts: Vec<f64> = table
        .prime_powers(prime_support(delta))
        .map(|(n, l)| l / (n as f64).sqrt())
        .collect();
    pairwise_sum(&parts) / PI
}

// e^{−s}/s − e^{−s/4}/(1 − e^{−s}), finite at s = 0.
fn gauss_bracket(s: f64) -> f64 {
    if s < 0.02 {
        -1.25 + s * (49.0 / 96.0 + s * (-61.0 / 384.0 + s * (3833.0 / 92160.0 - s * 1049.0 / 122880.0)))
    } else {
        (-s).exp() / s + (-0.25 * s).exp() / (-s).exp_m1()
    }
}

/// `(1/2π) ∫ k(t−u) Re ψ(¼ + iu/2) du`.
///
/// Gauss's integral for ψ turns this into
/// `(1/2π) ∫_0^∞ [k̂(0)e^{−s}/s − e^{−s/4} k̂(s/4π) cos(st/2)/(1 − e^{−s})] ds`,
/// whose oscillatory part stops at `s = 4πΔ`; the remainder is
/// `k̂(0)E₁(4πΔ)`.
pub fn gamma_integral<F: Fn(f64) -> Result<f64>>(kernel_ft: F, t: f64, delta: f64, tol: f64) -> Result<f64> {
    let k0 = kernel_ft(0.0)?;
    let big_s = 4.0 * PI * delta;
    let failure = std::cell::RefCell::new(None);
    let f = |s: f64| {
        let ks = match kernel_ft(s / (4.0 * PI)) {
            Ok(v) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        };
        let osc = (-0.25 * s).exp() * (k0 - ks * (0.5 * s * t).cos()) / -(-s).exp_m1();
        k0 * gauss_bracket(s) + osc
    };
    let step = if t > 0.0 { (4.0 * PI / t).min(1.0) } else { 1.0 };
    let head = quad_pieces(f, 0.0, big_s, step, 0.5 * tol)?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let e1 = integrate(|s: f64| (-s).exp() / s, big_s, f64::INFINITY, &QuadOptions::tol(1e-16))?.value;
    Ok((head + k0 * e1) / (2.0 * PI))
}

/// Largest `|k′|` seen on a fine grid, doubled; converts the table's
/// per-entry precision into a bound on the zero side.
fn lipschitz_estimate(kernel: &Kernel, sign: Sign) -> Result<f64> {
    let h = 1e-4;
    let mut worst: f64 = 0.0;
    let mut x: f64 = 0.0;
    while x <= 20.0 {
        let d = (kernel.eval(sign, x + h)? - kernel.eval(sign, x - h)?) / (2.0 * h);
        worst = worst.max(d.abs());
        x += 0.01;
    }
    Ok(2.0 * worst)
}

/// Evaluate both sides at `(t, Δ)` with the zeros of `zeros` and the prime
/// powers of `table`.
pub fn gw_evaluate(
    spec: KernelSpec,
    sign: Sign,
    t: f64,
    delta: f64,
    zeros: &ZeroTable,
    table: &MangoldtTable,
) -> Result<GwReport> {
    let mut kernel = Kernel::build(spec, delta)?;
    kernel.prepare_range(t + zeros.last() + 1.0);
    gw_evaluate_kernel(&kernel, sign, t, zeros, table)
}

/// [`gw_evaluate`] for an already constructed kernel.
pub fn gw_evaluate_kernel(kernel: &Kernel, sign: Sign, t: f64, zeros: &ZeroTable, table: &MangoldtTable) -> Result<GwReport> {
    let delta = kernel.delta();
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t must be finite and non-negative, got {t}")));
    }
    check_table(prime_support(delta), table)?;

    let zero_side = symmetric_zero_sum(|x| kernel.eval(sign, x), t, zeros)?;
    let precision_part = 2.0 * zeros.len() as f64 * zeros.precision() * lipschitz_estimate(kernel, sign)?;
    let zero_tail = zero_tail_bound(kernel.envelope(sign)?, t, zeros)? + precision_part;

    // h(i/2) + h(−i/2) = k(t − i/2) + k(t + i/2) = 2 Re k(t + i/2)
    let arch_terms = 2.0 * kernel.eval_complex(sign, Complex64::new(t, 0.5))?.re;
    let ft = |xi: f64| kernel.ft(sign, xi);
    let k0 = ft(0.0)?;
    let log_pi_term = k0 * PI.ln() / (2.0 * PI);
    let gamma = gamma_integral(ft, t, delta, 1e-10)?;
    let primes = prime_sum(ft, t, delta, table)?;
    let prime_tail = kernel.ft_error(sign) * prime_weight(delta, table);

    let residual = zero_side - (arch_terms - log_pi_term + gamma - primes);
    Ok(GwReport {
        t,
        delta,
        kernel: kernel.spec(),
        sign,
        zero_side,
        zero_tail_bound: zero_tail,
        arch_terms,
        gamma_integral: gamma,
        log_pi_term,
        prime_sum: primes,
        prime_tail_bound: prime_tail,
        residual,
    })
}
