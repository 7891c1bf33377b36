//! `ζ(s)` and `ζ′(s)` for `Re s > 0` by Euler–Maclaurin summation, plus the
//! Dirichlet-series routes for `ζ′/ζ` and `log ζ` in the half-plane of
//! absolute convergence.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numkit::special::BERNOULLI_2K;
use crate::numkit::{sieve_mangoldt, MangoldtTable, DEFAULT_MANGOLDT_LIMIT};

/// Absolute tolerance used when callers do not ask for anything sharper.
pub const DEFAULT_ZETA_TOL: f64 = 1e-12;

// Chebyshev-type constant: ψ(x) < 1.03883 x for all x > 0.
const PSI_RATIO: f64 = 1.03883;

// Largest Euler–Maclaurin cut-off we are willing to sum directly.
const MAX_EM_TERMS: u64 = 50_000_000;

/// `ζ(s)` and `ζ′(s)` with a joint absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEval {
    pub value: Complex64,
    pub deriv: Complex64,
    pub err: f64,
}

fn check_domain(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!("zeta is only evaluated for Re s > 0, got {s}")));
    }
    let d = (s - 1.0).norm();
    if d < 1e-8 {
        return Err(Error::Pole(d));
    }
    Ok(())
}

/// Euler–Maclaurin with cut-off `n`; `None` if 15 correction terms do not
/// reach `tol` at this cut-off.
fn em_at(s: Complex64, n: u64, tol: f64) -> Option<ZetaEval> {
    let big_n = n as f64;
    let ln_n = big_n.ln();
    // N^{-s}
    let n_pow = (-s * ln_n).exp();

    // Boundary terms.
    let sm1 = s - 1.0;
    let lead = n_pow * big_n / sm1;
    let mut value = lead + 0.5 * n_pow;
    let mut deriv = -ln_n * lead - lead / sm1 - 0.5 * ln_n * n_pow;

    // Bernoulli corrections T_k = B_2k/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}.
    let mut poch = s;
    let mut harm = 1.0 / s;
    let mut fact = 2.0;
    let mut pow = n_pow / big_n;
    let mut err = f64::INFINITY;
    let mut derr = f64::INFINITY;
    for (k, b) in BERNOULLI_2K.iter().enumerate() {
        let term = *b / fact * poch * pow;
        let dterm = term * (harm - ln_n);
        let j = 2.0 * (k as f64) + 1.0;
        // Remainder after k terms is at most |s+2k+1|/(σ+2k+1) times the
        // first omitted term.
        let factor = (s + j).norm() / (s.re + j);
        err = term.norm() * factor;
        derr = dterm.norm() * factor * 2.0;
        if err <= 0.1 * tol && derr <= 0.1 * tol {
            break;
        }
        value += term;
        deriv += dterm;
        let a = s + j;
        let b2 = s + j + 1.0;
        poch *= a * b2;
        harm += 1.0 / a + 1.0 / b2;
        fact *= (j + 2.0) * (j + 3.0);
        pow /= big_n * big_n;
    }
    if err > 0.1 * tol || derr > 0.1 * tol {
        return None;
    }

    // Head Σ_{m<N} m^{−s}, smallest terms first.
    let mut hv = Complex64::new(0.0, 0.0);
    let mut hd = Complex64::new(0.0, 0.0);
    for m in (1..n).rev() {
        let lm = (m as f64).ln();
        let p = (-s * lm).exp();
        hv += p;
        hd -= lm * p;
    }
    value += hv;
    deriv += hd;
    let round = f64::EPSILON * (n as f64) * (1.0 + ln_n);
    Some(ZetaEval {
        value,
        deriv,
        err: err.max(derr) + round,
    })
}

/// `ζ(s)` and `ζ′(s)` to absolute tolerance `tol`.
///
/// The cut-off starts at `max(20, ⌈2|Im s|⌉)` and doubles until the
/// Bernoulli corrections (up to `B_30`) meet the tolerance.
pub fn zeta_with_derivative(s: Complex64, tol: f64) -> Result<ZetaEval> {
    check_domain(s)?;
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut n = 20u64.max((2.0 * s.im.abs()).ceil() as u64);
    loop {
        if let Some(r) = em_at(s, n, tol) {
            return Ok(r);
        }
        n *= 2;
        if n > MAX_EM_TERMS {
            return Err(Error::Resource {
                what: "Euler-Maclaurin cut-off",
                requested: n,
                limit: MAX_EM_TERMS,
            });
        }
    }
}

/// `ζ(s)` for `Re s > 0`, `s ≠ 1`.
pub fn zeta(s: Complex64, tol: f64) -> Result<Complex64> {
    zeta_with_derivative(s, tol).map(|r| r.value)
}

/// `ζ(σ)` for real `σ > 0`, `σ ≠ 1`.
pub fn zeta_real_positive(sigma: f64) -> Result<f64> {
    zeta(Complex64::new(sigma, 0.0), DEFAULT_ZETA_TOL).map(|z| z.re)
}

/// `ζ′/ζ(s)` from the joint Euler–Maclaurin evaluation.
///
/// Fails with a conditioning error within about `1e-6` of a zero or the pole
/// (where `|ζ/ζ′|` is the distance to the nearest simple zero or pole).
pub fn zeta_logderiv(s: Complex64, tol: f64) -> Result<Complex64> {
    zeta_logderiv_with_error(s, tol).map(|(v, _)| v)
}

/// [`zeta_logderiv`] together with a propagated error estimate.
pub fn zeta_logderiv_with_error(s: Complex64, tol: f64) -> Result<(Complex64, f64)> {
    if (s - 1.0).norm() < 1e-6 {
        return Err(Error::Conditioning(format!("s = {s} is within 1e-6 of the pole")));
    }
    let z = zeta_with_derivative(s, tol)?;
    let a = z.value.norm();
    if a < 1e-6 * z.deriv.norm() || a == 0.0 {
        return Err(Error::Conditioning(format!(
            "s = {s} is within 1e-6 of a zero of zeta (|zeta| = {a:e})"
        )));
    }
    let v = z.deriv / z.value;
    let err = z.err * (1.0 + v.norm()) / a;
    Ok((v, err))
}

// Small Λ table shared by the cheap large-σ evaluations.
fn small_table() -> &'static MangoldtTable {
    static T: OnceLock<MangoldtTable> = OnceLock::new();
    T.get_or_init(|| sieve_mangoldt(1 << 16).expect("small sieve"))
}

/// Smallest `N` with `Σ_{n>N} Λ(n) n^{−σ} ≤ tol`, by partial summation
/// against `ψ(x) < 1.03883 x`.
pub(crate) fn dirichlet_cutoff(sigma: f64, tol: f64) -> f64 {
    // PSI_RATIO σ N^{1−σ}/(σ−1) ≤ tol
    let c = PSI_RATIO * sigma / ((sigma - 1.0) * tol);
    c.powf(1.0 / (sigma - 1.0)).ceil().max(2.0)
}

fn dirichlet_sum(s: Complex64, tol: f64, with_log: bool) -> Result<Complex64> {
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("Dirichlet series needs Re s > 1, got {s}")));
    }
    let n = dirichlet_cutoff(s.re, tol);
    if n > DEFAULT_MANGOLDT_LIMIT as f64 {
        return Err(Error::Resource {
            what: "Dirichlet series length",
            requested: n.min(u64::MAX as f64) as u64,
            limit: DEFAULT_MANGOLDT_LIMIT,
        });
    }
    let n = n as u64;
    let owned;
    let table = if n <= small_table().limit() {
        small_table()
    } else {
        owned = sieve_mangoldt(n)?;
        &owned
    };
    let mut acc = Complex64::new(0.0, 0.0);
    let pps: Vec<(u64, f64)> = table.prime_powers(n as f64).collect();
    for &(m, lam) in pps.iter().rev() {
        let lm = (m as f64).ln();
        let w = if with_log { lam / lm } else { lam };
        acc += w * (-s * lm).exp();
    }
    Ok(acc)
}

/// `ζ′/ζ(s) = −Σ Λ(n) n^{−s}` for `Re s > 1`, truncated so the dropped tail
/// is at most `tol`.
pub fn zeta_logderiv_dirichlet(s: Complex64, tol: f64) -> Result<Complex64> {
    dirichlet_sum(s, tol, false).map(|v| -v)
}

/// Principal branch `log ζ(s) = Σ Λ(n)/(log n) n^{−s}` for `Re s > 1`.
pub fn log_zeta_dirichlet(s: Complex64, tol: f64) -> Result<Complex64> {
    dirichlet_sum(s, tol, true)
}

/// `ζ′/ζ(s)` by whichever route is cheaper at this point: the Dirichlet
/// series once it needs only a few thousand terms, Euler–Maclaurin
/// otherwise.
pub(crate) fn logderiv_fast(s: Complex64, tol: f64) -> Result<(Complex64, f64)> {
    if s.re > 1.5 {
        let n = dirichlet_cutoff(s.re, tol);
        let em_n = 20f64.max(2.0 * s.im.abs());
        if n <= small_table().limit() as f64 && n < em_n {
            return zeta_logderiv_dirichlet(s, tol).map(|v| (v, tol));
        }
    }
    zeta_logderiv_with_error(s, tol)
}
