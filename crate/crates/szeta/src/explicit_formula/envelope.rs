//! Closed-form main terms bounding the prime-power sums of the two kernel
//! families.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::Sign;

/// Main term of the Poisson prime-sum bound: a lower bound on the sum for
/// the majorant (returned negated) and an upper bound for the minorant.
///
/// ```text
/// (2βe^{(1−2β)πΔ} − 2^{½−β}(½+β)² + 2^{½+β}e^{−4πβΔ}(½−β)²)
///   / ((¼−β²)(1 ∓ e^{−2πβΔ})²)
/// ```
pub fn prime_sum_envelope_poisson(sign: Sign, beta: f64, delta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta < 0.5) {
        return domain(format!("beta must lie in (0, 1/2), got {beta}"));
    }
    if !(delta >= 1.0) {
        return domain(format!("delta must be >= 1, got {delta}"));
    }
    let num = poisson_numerator(beta, delta);
    let e = (-2.0 * PI * beta * delta).exp();
    let den = match sign {
        Sign::Plus => (0.25 - beta * beta) * (-(-2.0 * PI * beta * delta).exp_m1()).powi(2),
        Sign::Minus => (0.25 - beta * beta) * (1.0 + e).powi(2),
    };
    Ok(match sign {
        Sign::Plus => -num / den,
        Sign::Minus => num / den,
    })
}

/// Shared numerator of both Poisson envelopes.
pub fn poisson_numerator(beta: f64, delta: f64) -> f64 {
    2.0 * beta * ((1.0 - 2.0 * beta) * PI * delta).exp() - 2f64.powf(0.5 - beta) * (0.5 + beta).powi(2)
        + 2f64.powf(0.5 + beta) * (-4.0 * PI * beta * delta).exp() * (0.5 - beta).powi(2)
}

/// Scale of the unstated error term: `βΔ⁴` for the minorant, `Δ⁴/β` for the
/// majorant.
pub fn poisson_envelope_error_scale(sign: Sign, beta: f64, delta: f64) -> f64 {
    match sign {
        Sign::Plus => delta.powi(4) / beta,
        Sign::Minus => beta * delta.powi(4),
    }
}

/// Main term and error scale of the odd-family prime-sum bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OddEnvelope {
    pub main: f64,
    pub error_scale: f64,
}

/// `∓(1/π)Σ Λ(n)n^{−½} ĝ±(log n/2π) cos(t log n) ≤ main + O(error_scale)` with
///
/// ```text
/// main        = (2α−1)(2m)!/(α(1−α)) · e^{(2−2α)πΔ}/(2πΔ)^{2m+2}
/// error_scale = e^{(2−2α)πΔ}/((1−α)²Δ^{2m+3})
/// ```
///
/// valid in the region `πΔ(1−α)² ≥ c`.
pub fn prime_sum_envelope_odd(m: u32, alpha: f64, delta: f64, c: f64) -> Result<OddEnvelope> {
    if !(0.5..1.0).contains(&alpha) {
        return domain(format!("alpha must lie in [1/2, 1), got {alpha}"));
    }
    if !(delta >= 1.0) || !(c > 0.0) {
        return domain("need delta >= 1 and c > 0");
    }
    let lhs = PI * delta * (1.0 - alpha).powi(2);
    if lhs < c {
        return Err(Error::Region(format!(
            "pi*delta*(1-alpha)^2 = {lhs} is below c = {c}"
        )));
    }
    let f2m: f64 = (1..=2 * m).map(f64::from).product();
    let grow = ((2.0 - 2.0 * alpha) * PI * delta).exp();
    let p = 2 * m as i32 + 2;
    Ok(OddEnvelope {
        main: (2.0 * alpha - 1.0) * f2m / (alpha * (1.0 - alpha)) * grow / (2.0 * PI * delta).powi(p),
        error_scale: grow / ((1.0 - alpha).powi(2) * delta.powi(p + 1)),
    })
}
