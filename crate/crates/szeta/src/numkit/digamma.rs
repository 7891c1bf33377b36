//! Digamma function on the real line and in the right half-plane.

use num_complex::Complex64;

use super::special::BERNOULLI_2K;

const SHIFT_RADIUS: f64 = 10.0;
const STIRLING_TERMS: usize = 8;

/// `ψ(x)` for real `x > 0`.
pub fn digamma(mut x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    while x < SHIFT_RADIUS {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    let mut p = inv2;
    for k in 0..STIRLING_TERMS {
        series += BERNOULLI_2K[k] / (2 * (k + 1)) as f64 * p;
        p *= inv2;
    }
    acc + x.ln() - 0.5 / x - series
}

/// `ψ(z)` for `Re z > 0`.
pub fn digamma_complex(mut z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < SHIFT_RADIUS {
        acc -= z.inv();
        z += 1.0;
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for k in 0..STIRLING_TERMS {
        series += p * (BERNOULLI_2K[k] / (2 * (k + 1)) as f64);
        p *= inv2;
    }
    acc + z.ln() - inv * 0.5 - series
}

/// `Re ψ(1/4 + iu/2)`, the archimedean weight of the explicit formula.
pub fn re_digamma_quarter(u: f64) -> f64 {
    digamma_complex(Complex64::new(0.25, 0.5 * u)).re
}
