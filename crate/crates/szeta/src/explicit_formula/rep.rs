//! Zero-sum representation of `S_{n,α}(t)`:
//!
//! ```text
//! n = 2m:    S = ((−1)^m/(π(2m)!)) Σ_γ f_{2m,α}(t−γ) + O(1)
//! n = 2m+1:  S = ((−1)^m/(2π(2m+2)!)) (3/2−α)^{2m+2} log t
//!              − ((−1)^m/(π(2m)!)) Σ_γ f_{2m+1,α}(t−γ) + O(1)
//! n = −1:    S = −(1/2π) log(t/2π) + (1/π) Σ_γ f_{−1,α}(t−γ) + O(1/t)
//! ```
//!
//! The sums run over all ordinates, `±γ`.

use std::f64::consts::PI;

use super::kernel::Envelope;
use super::zero_sums::{symmetric_zero_sum, zero_tail_bound};
use crate::error::{domain, Error, Result};
use crate::numkit::quad_adaptive;
use crate::zeta_core::{SnMethod, SnValue, ZeroTable};

/// Zeros above `t` the table must cover before a representation sum is
/// attempted.
pub const COVERAGE_WINDOW: f64 = 20.0;

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// The functions `f_{n,α}` of the representation formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepTarget {
    n: i32,
    alpha: f64,
    // ∫_α^{3/2}(σ−α)^{2m}(1 − (σ−½)²) dσ
    m1: f64,
}

impl RepTarget {
    pub fn new(n: i32, alpha: f64) -> Result<Self> {
        if n < -1 {
            return domain(format!("n must be at least -1, got {n}"));
        }
        if !(0.5..=1.0).contains(&alpha) {
            return domain(format!("alpha must lie in [1/2, 1], got {alpha}"));
        }
        if n == -1 && alpha == 0.5 {
            return domain("f_{-1,1/2} vanishes identically; the n = -1 formula needs alpha > 1/2");
        }
        let p = if n >= 0 { 2 * (n / 2) } else { 0 };
        let m1 = quad_adaptive(
            |s: f64| (s - alpha).powi(p) * (1.0 - (s - 0.5).powi(2)),
            alpha,
            1.5,
            1e-15,
        )?;
        Ok(RepTarget { n, alpha, m1 })
    }

    fn weight_power(&self) -> i32 {
        2 * (self.n / 2)
    }

    /// `f_{n,α}(x)`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let a = self.alpha;
        let p = self.weight_power();
        match self.n {
            -1 => {
                let b = a - 0.5;
                Ok(b / (b * b + x * x))
            }
            n if n % 2 == 0 => {
                if x == 0.0 {
                    return Ok(0.0);
                }
                let x2 = x * x;
                let g = |s: f64| {
                    let u = s - 0.5;
                    (s - a).powi(p) * x * (1.0 - u * u) / ((u * u + x2) * (1.0 + x2))
                };
                quad_adaptive(g, a, 1.5, 1e-14)
            }
            _ => {
                let x2 = x * x;
                let g = |s: f64| {
                    let u = s - 0.5;
                    (s - a).powi(p) * ((1.0 - u * u) / (u * u + x2)).ln_1p()
                };
                Ok(0.5 * quad_adaptive(g, a, 1.5, 1e-14)?)
            }
        }
    }

    /// `f′_{n,α}(x)` by a central difference (used only for error
    /// propagation).
    pub fn deriv(&self, x: f64) -> Result<f64> {
        let h = 1e-5 * (1.0 + x.abs());
        Ok((self.eval(x + h)? - self.eval(x - h)?) / (2.0 * h))
    }

    /// Envelope used for truncating the zero sum.
    pub fn envelope(&self) -> Envelope {
        match self.n {
            -1 => {
                let b = self.alpha - 0.5;
                Envelope::Lorentz { k: b, b2: b * b }
            }
            // |f_{2m}(x)| ≤ M₁/|x|³
            n if n % 2 == 0 => Envelope::Power {
                k: self.m1,
                p: 3,
                cap: f64::INFINITY,
            },
            // 0 ≤ f_{2m+1}(x) ≤ M₁/(2x²)
            _ => Envelope::Power {
                k: 0.5 * self.m1,
                p: 2,
                cap: f64::INFINITY,
            },
        }
    }
}

/// Coefficient in front of the zero sum and the explicit smooth term.
fn assemble(n: i32, alpha: f64, t: f64) -> (f64, f64) {
    match n {
        -1 => (1.0 / PI, -(t / (2.0 * PI)).ln() / (2.0 * PI)),
        n if n % 2 == 0 => {
            let m = (n / 2) as u32;
            let sgn = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
            (sgn / (PI * factorial(2 * m)), 0.0)
        }
        n => {
            let m = ((n - 1) / 2) as u32;
            let sgn = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
            let lead = sgn / (2.0 * PI * factorial(2 * m + 2)) * (1.5 - alpha).powi(2 * m as i32 + 2) * t.ln();
            (-sgn / (PI * factorial(2 * m)), lead)
        }
    }
}

/// `S_{n,α}(t)` from the representation formula with the tabulated zeros,
/// without its `O(1)` (or `O(1/t)`) term. `est_error` covers only the
/// truncation of the zero sum.
pub fn rep_sum(n: i32, alpha: f64, t: f64, zeros: &ZeroTable) -> Result<SnValue> {
    if !(t >= 2.0) {
        return domain(format!("the representation formula needs t >= 2, got {t}"));
    }
    let target = RepTarget::new(n, alpha)?;
    if zeros.last() < t + COVERAGE_WINDOW {
        return Err(Error::Domain(format!(
            "zero table ends at {} and does not cover [{t}, {}]",
            zeros.last(),
            t + COVERAGE_WINDOW
        )));
    }
    let sum = symmetric_zero_sum(|x| target.eval(x), t, zeros)?;
    let tail = zero_tail_bound(target.envelope(), t, zeros)?;
    let (coef, lead) = assemble(n, alpha, t);
    Ok(SnValue {
        n,
        alpha,
        t,
        value: lead + coef * sum,
        method: SnMethod::ZeroSum,
        est_error: coef.abs() * tail,
    })
}

/// `Σ_γ |f′_{n,α}(t∓γ)|` over the table, for propagating ordinate errors.
pub fn rep_sum_sensitivity(n: i32, alpha: f64, t: f64, zeros: &ZeroTable) -> Result<f64> {
    let target = RepTarget::new(n, alpha)?;
    let (coef, _) = assemble(n, alpha, t);
    let mut s = 0.0;
    for &g in zeros.ordinates() {
        s += target.deriv(t - g)?.abs() + target.deriv(t + g)?.abs();
    }
    Ok(coef.abs() * s)
}
