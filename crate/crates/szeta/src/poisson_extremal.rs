//! Extremal majorant/minorant of exponential type `2πΔ` for the Poisson
//! kernel `h_β(x) = β/(β² + x²)`.
//!
//! Everything here is closed form:
//!
//! ```text
//! m±(z) = β/(β²+z²) · (e^{2πβΔ} + e^{−2πβΔ} − 2cos 2πΔz) / (e^{πβΔ} ∓ e^{−πβΔ})²
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoissonExtremalPair {
    beta: f64,
    delta: f64,
}

impl PoissonExtremalPair {
    /// `0 < β < 1/2`, `Δ ≥ 1`.
    pub fn new(beta: f64, delta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta < 0.5) {
            return domain(format!("beta must lie in (0, 1/2), got {beta}"));
        }
        if !(delta >= 1.0) || !delta.is_finite() {
            return domain(format!("delta must be >= 1, got {delta}"));
        }
        Ok(PoissonExtremalPair { beta, delta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn h(&self, x: f64) -> f64 {
        self.beta / (self.beta * self.beta + x * x)
    }

    /// `(e^{πβΔ} ∓ e^{−πβΔ})²/4`, i.e. sinh² or cosh² of `πβΔ`.
    fn denom_quarter(&self, sign: Sign) -> f64 {
        let a = PI * self.beta * self.delta;
        match sign {
            Sign::Plus => a.sinh().powi(2),
            Sign::Minus => a.cosh().powi(2),
        }
    }

    /// `m±(x)` on the real line, in a cancellation-free form.
    pub fn m(&self, sign: Sign, x: f64) -> f64 {
        let s2 = (PI * self.delta * x).sin().powi(2);
        let d = self.denom_quarter(sign);
        // 2cosh(2a) − 2cos(2πΔx) = 4(sinh²a + sin²πΔx)
        let num = (PI * self.beta * self.delta).sinh().powi(2) + s2;
        self.beta * num / ((self.beta * self.beta + x * x) * d)
    }

    /// `m±(z)` for complex `z`.
    ///
    /// Uses the factorisation through `sin πΔ(z ± iβ)/(z ± iβ)`, which has
    /// no removable singularity at `z = ±iβ`. `|Im z|` is clamped to
    /// `700/(2πΔ)` to keep the exponentials finite.
    pub fn m_complex(&self, sign: Sign, z: Complex64) -> Complex64 {
        let cap = 700.0 / (2.0 * PI * self.delta);
        let z = Complex64::new(z.re, z.im.clamp(-cap, cap));
        let ib = Complex64::new(0.0, self.beta);
        let d = self.delta;
        let s1 = csinc(d * (z + ib));
        let s2 = csinc(d * (z - ib));
        s1 * s2 * (self.beta * PI * PI * d * d / self.denom_quarter(sign))
    }

    /// `m̂±(ξ) = ∫ m±(x) e^{−2πixξ} dx`; supported on `[−Δ, Δ]`.
    pub fn ft_m(&self, sign: Sign, xi: f64) -> f64 {
        let r = self.delta - xi.abs();
        if r <= 0.0 {
            return 0.0;
        }
        // π(e^{2πβr} − e^{−2πβr})/(4·denom_quarter)
        PI * 2.0 * (2.0 * PI * self.beta * r).sinh() / (4.0 * self.denom_quarter(sign))
    }

    /// `∫(m⁺ − h)` for `Plus`, `∫(h − m⁻)` for `Minus`.
    pub fn l1_gap(&self, sign: Sign) -> f64 {
        let e = (-2.0 * PI * self.beta * self.delta).exp();
        match sign {
            Sign::Plus => 2.0 * PI * e / -(-2.0 * PI * self.beta * self.delta).exp_m1(),
            Sign::Minus => 2.0 * PI * e / (1.0 + e),
        }
    }

    /// A rigorous majorant of `|m±(x)|` on the real line of the form
    /// `K·β/(β² + x²)`, used for truncating zero sums.
    pub fn decay_constant(&self, sign: Sign) -> f64 {
        match sign {
            // sin² ≤ 1 in the numerator gives coth²(πβΔ)
            Sign::Plus => (PI * self.beta * self.delta).tanh().powi(-2),
            // 0 ≤ m⁻ ≤ h
            Sign::Minus => 1.0,
        }
    }
}

/// `sin(πw)/(πw)` for complex `w`, Taylor-guarded at the origin.
pub(crate) fn csinc(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        let p2 = (w * PI) * (w * PI);
        Complex64::new(1.0, 0.0) - p2 / 6.0 + p2 * p2 / 120.0
    } else {
        let pw = w * PI;
        pw.sin() / pw
    }
}
