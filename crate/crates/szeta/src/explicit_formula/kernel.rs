//! The two kernel families fed into the explicit formula.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::odd_extremal::{OddExtremalPair, DEFAULT_N_MAX};
use crate::poisson_extremal::PoissonExtremalPair;
use crate::Sign;

/// Which target function the extremal pair approximates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum KernelSpec {
    /// Poisson kernel `β/(β²+x²)`, `β = α − ½`.
    Poisson { beta: f64 },
    /// `f_{2m+1,α}`.
    Odd { m: u32, alpha: f64 },
}

impl std::fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KernelSpec::Poisson { beta } => write!(f, "poisson(beta={beta})"),
            KernelSpec::Odd { m, alpha } => write!(f, "odd(m={m}, alpha={alpha})"),
        }
    }
}

/// An extremal pair instantiated at a given `Δ`.
#[derive(Debug, Clone)]
pub enum Kernel {
    Poisson(PoissonExtremalPair),
    Odd(Box<OddExtremalPair>),
}

// Absolute accuracy of ĝ for the odd family (its series tolerance is 1e-13).
const ODD_FT_ERR: f64 = 1e-12;

impl Kernel {
    pub fn build(spec: KernelSpec, delta: f64) -> Result<Self> {
        Self::build_with_tol(spec, delta, crate::odd_extremal::DEFAULT_SERIES_TOL)
    }

    /// As [`Kernel::build`], with the interpolation-series tolerance of the
    /// odd family set explicitly.
    pub fn build_with_tol(spec: KernelSpec, delta: f64, series_tol: f64) -> Result<Self> {
        Ok(match spec {
            KernelSpec::Poisson { beta } => Kernel::Poisson(PoissonExtremalPair::new(beta, delta)?),
            KernelSpec::Odd { m, alpha } => Kernel::Odd(Box::new(OddExtremalPair::with_options(
                m,
                alpha,
                delta,
                series_tol,
                DEFAULT_N_MAX,
            )?)),
        })
    }

    /// Cache whatever makes evaluation on `|x| ≤ x_max` cheap.
    pub fn prepare_range(&mut self, x_max: f64) {
        if let Kernel::Odd(p) = self {
            p.extend_nodes(x_max);
        }
    }

    pub fn spec(&self) -> KernelSpec {
        match self {
            Kernel::Poisson(p) => KernelSpec::Poisson { beta: p.beta() },
            Kernel::Odd(p) => KernelSpec::Odd {
                m: p.m(),
                alpha: p.alpha(),
            },
        }
    }

    pub fn delta(&self) -> f64 {
        match self {
            Kernel::Poisson(p) => p.delta(),
            Kernel::Odd(p) => p.delta(),
        }
    }

    pub fn eval(&self, sign: Sign, x: f64) -> Result<f64> {
        match self {
            Kernel::Poisson(p) => Ok(p.m(sign, x)),
            Kernel::Odd(p) => p.g(sign, x),
        }
    }

    pub fn eval_complex(&self, sign: Sign, z: Complex64) -> Result<Complex64> {
        match self {
            Kernel::Poisson(p) => Ok(p.m_complex(sign, z)),
            Kernel::Odd(p) => p.g_complex(sign, z),
        }
    }

    /// Fourier transform, supported on `[−Δ, Δ]`.
    pub fn ft(&self, sign: Sign, xi: f64) -> Result<f64> {
        match self {
            Kernel::Poisson(p) => Ok(p.ft_m(sign, xi)),
            Kernel::Odd(p) => p.ft_g(sign, xi),
        }
    }

    /// Absolute accuracy of a single [`Kernel::ft`] value.
    pub fn ft_error(&self, sign: Sign) -> f64 {
        match self {
            Kernel::Poisson(p) => 8.0 * f64::EPSILON * p.ft_m(sign, 0.0),
            Kernel::Odd(_) => ODD_FT_ERR,
        }
    }

    /// Real-line envelope `E(x) ≥ |k(x)|`.
    pub fn envelope(&self, sign: Sign) -> Result<Envelope> {
        Ok(match self {
            Kernel::Poisson(p) => Envelope::Lorentz {
                k: p.decay_constant(sign) * p.beta(),
                b2: p.beta() * p.beta(),
            },
            Kernel::Odd(p) => Envelope::Lorentz {
                k: p.decay_constant(sign)?,
                b2: 1.0,
            },
        })
    }
}

/// Decay envelope of a kernel on the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    /// `k/(b2 + x²)`
    Lorentz { k: f64, b2: f64 },
    /// `k/|x|^p`, capped at `cap` near the origin.
    Power { k: f64, p: i32, cap: f64 },
}

impl Envelope {
    pub fn at(&self, x: f64) -> f64 {
        match *self {
            Envelope::Lorentz { k, b2 } => k / (b2 + x * x),
            Envelope::Power { k, p, cap } => (k / x.abs().powi(p)).min(cap),
        }
    }
}
