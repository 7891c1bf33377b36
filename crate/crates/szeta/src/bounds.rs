//! Bound constants and envelopes for `S_{n,α}(t)` under RH.
//!
//! With `L = log t` and `y = L^{1−2α}`, the odd-index constants are
//!
//! ```text
//! C±_{n,α}(t) = (H_{n+1}(±(−1)^{(n+1)/2} y) + (2α−1)/(α(1−α))) / (2^{n+1}π)
//! ```
//!
//! and the even-index ones come out of interpolating between the two odd
//! neighbours. The envelope for `S_{n,α}(t)` is `[−C⁻ℓ, C⁺ℓ]` with
//! `ℓ = ℓ_{n+1,α}(t) = L^{2−2α}/(log L)^{n+1}`, up to an error term of unknown
//! constant times `r_{n+2,α}(t) = ℓ/((1−α)² log L)`.

use std::f64::consts::{LN_2, PI, SQRT_2};

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numkit::{polylog_h, zeta_real};
use crate::zeta_core::SnValue;
use crate::Sign;

/// Default multiple of the error scale tolerated by [`check_envelope`].
pub const DEFAULT_SLACK: f64 = 10.0;

/// Default region constant `c` in `(1−α)² log log t ≥ c`.
pub const DEFAULT_REGION_C: f64 = 0.1;

fn loglog(t: f64) -> Result<f64> {
    if !(t > std::f64::consts::E) || !t.is_finite() {
        return domain(format!("t must exceed e, got {t}"));
    }
    Ok(t.ln().ln())
}

fn require_large_t(t: f64) -> Result<f64> {
    let ll = loglog(t)?;
    if ll < 4.0 {
        return domain(format!("log log t = {ll} is below 4"));
    }
    Ok(ll)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.5..1.0).contains(&alpha) {
        return domain(format!("alpha must lie in [1/2, 1), got {alpha}"));
    }
    Ok(())
}

/// `(2α−1)/(α(1−α))`.
pub fn alpha_term(alpha: f64) -> f64 {
    (2.0 * alpha - 1.0) / (alpha * (1.0 - alpha))
}

fn odd_unchecked(n: i32, alpha: f64, t: f64, sign: Sign) -> Result<f64> {
    let y = t.ln().powf(1.0 - 2.0 * alpha);
    let parity = if ((n + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let h = polylog_h((n + 1) as u32, sign.as_f64() * parity * y)?;
    Ok((h + alpha_term(alpha)) / (2f64.powi(n + 1) * PI))
}

fn even_unchecked(n: i32, alpha: f64, t: f64) -> Result<f64> {
    let up = odd_unchecked(n + 1, alpha, t, Sign::Plus)? + odd_unchecked(n + 1, alpha, t, Sign::Minus)?;
    if n == 0 {
        return Ok((2.0 * up * odd_unchecked(-1, alpha, t, Sign::Minus)?).sqrt());
    }
    let p = odd_unchecked(n - 1, alpha, t, Sign::Plus)?;
    let m = odd_unchecked(n - 1, alpha, t, Sign::Minus)?;
    Ok((2.0 * up * p * m / (p + m)).sqrt())
}

/// `C±_{n,α}(t)` for odd `n ≥ −1`. At `α = ½` this is the limiting value;
/// `C⁺_{−1}` has no limit there and is reported as a domain error.
pub fn c_odd(n: i32, alpha: f64, t: f64, sign: Sign) -> Result<f64> {
    if n < -1 || n % 2 == 0 {
        return domain(format!("c_odd needs odd n >= -1, got {n}"));
    }
    check_alpha(alpha)?;
    require_large_t(t)?;
    if n == -1 && sign == Sign::Plus && alpha == 0.5 {
        return domain("C+_{-1} blows up as alpha -> 1/2");
    }
    odd_unchecked(n, alpha, t, sign)
}

/// `C±_{n,α}(t)` for even `n ≥ 0`; both signs share one value.
pub fn c_even(n: i32, alpha: f64, t: f64, sign: Sign) -> Result<f64> {
    let _ = sign;
    if n < 0 || n % 2 != 0 {
        return domain(format!("c_even needs even n >= 0, got {n}"));
    }
    check_alpha(alpha)?;
    require_large_t(t)?;
    even_unchecked(n, alpha, t)
}

/// `C±_{n,α}(t)` for any `n ≥ −1`.
pub fn c_constant(n: i32, alpha: f64, t: f64, sign: Sign) -> Result<f64> {
    if n >= 0 && n % 2 == 0 {
        c_even(n, alpha, t, sign)
    } else {
        c_odd(n, alpha, t, sign)
    }
}

/// The critical-line constants `C±_n`, the `α → ½⁺`, `t → ∞` limits of
/// [`c_constant`].
pub fn critical_line_constant(n: u32, sign: Sign) -> Result<f64> {
    let scale = |k: u32| PI * 2f64.powi(k as i32 + 1);
    let zeta = |s: u32| zeta_real(s as f64);
    Ok(match n {
        0 => 0.25,
        _ if n % 2 == 1 => {
            let full = zeta(n + 1)? / scale(n);
            let reduced = (1.0 - 2f64.powi(-(n as i32))) * full;
            // n ≡ 1 mod 4: C⁻ is the full value; n ≡ 3 mod 4: C⁺ is.
            match (n % 4 == 1, sign) {
                (true, Sign::Minus) | (false, Sign::Plus) => full,
                _ => reduced,
            }
        }
        _ => {
            let n = n as i32;
            let inner = (1.0 - 2f64.powi(-n - 2)) * (1.0 - 2f64.powi(-n + 1)) * zeta(n as u32)? * zeta(n as u32 + 2)?
                / (1.0 - 2f64.powi(-n));
            SQRT_2 / (PI * 2f64.powi(n + 1)) * inner.sqrt()
        }
    })
}

/// Main terms and error scales of the bound on `S_{n,α}(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundEnvelope {
    pub n: i32,
    pub alpha: f64,
    pub t: f64,
    pub c: f64,
    /// `−C⁻_{n,α}(t)·ℓ_{n+1,α}(t)`
    pub lower_main: f64,
    /// `C⁺_{n,α}(t)·ℓ_{n+1,α}(t)`
    pub upper_main: f64,
    pub ell: f64,
    /// `r_{n+2,α}(t)`
    pub err_scale: f64,
    /// Error scale on the lower side; differs from `err_scale` only for `n = −1`.
    pub lower_err_scale: f64,
    pub upper_err_scale: f64,
}

impl BoundEnvelope {
    /// `[lower_main − slack·lower_err_scale, upper_main + slack·upper_err_scale]`.
    pub fn band(&self, slack: f64) -> (f64, f64) {
        (
            self.lower_main - slack * self.lower_err_scale,
            self.upper_main + slack * self.upper_err_scale,
        )
    }
}

/// `ℓ_{k,α}(t) = (log t)^{2−2α}/(log log t)^k`.
pub fn ell(k: i32, alpha: f64, t: f64) -> Result<f64> {
    Ok(t.ln().powf(2.0 - 2.0 * alpha) / loglog(t)?.powi(k))
}

/// `r_{k,α}(t) = (log t)^{2−2α}/((1−α)²(log log t)^k)`.
pub fn r_scale(k: i32, alpha: f64, t: f64) -> Result<f64> {
    Ok(ell(k, alpha, t)? / (1.0 - alpha).powi(2))
}

/// [`envelope`] without the region check, for reporting outside the region
/// where the bound is asserted.
pub fn envelope_unchecked(n: i32, alpha: f64, t: f64, c: f64) -> Result<BoundEnvelope> {
    if n < -1 {
        return domain(format!("n must be >= -1, got {n}"));
    }
    if !(alpha > 0.5 && alpha < 1.0) {
        return domain(format!("alpha must lie in (1/2, 1), got {alpha}"));
    }
    let (cp, cm) = if n >= 0 && n % 2 == 0 {
        let v = even_unchecked(n, alpha, t)?;
        (v, v)
    } else {
        (odd_unchecked(n, alpha, t, Sign::Plus)?, odd_unchecked(n, alpha, t, Sign::Minus)?)
    };
    let l = ell(n + 1, alpha, t)?;
    let r = r_scale(n + 2, alpha, t)?;
    let (lo_err, up_err) = if n == -1 {
        let b = alpha - 0.5;
        (b * r, r / b)
    } else {
        (r, r)
    };
    Ok(BoundEnvelope {
        n,
        alpha,
        t,
        c,
        lower_main: -cm * l,
        upper_main: cp * l,
        ell: l,
        err_scale: r,
        lower_err_scale: lo_err,
        upper_err_scale: up_err,
    })
}

/// Whether `(1−α)² log log t ≥ c` and `log log t ≥ 4`; the message names the
/// first inequality that fails.
pub fn region_check(alpha: f64, t: f64, c: f64) -> Result<()> {
    let ll = loglog(t)?;
    if ll < 4.0 {
        return Err(Error::Region(format!("log log t >= 4 fails: log log t = {ll}")));
    }
    let lhs = (1.0 - alpha).powi(2) * ll;
    if lhs < c {
        return Err(Error::Region(format!(
            "(1-alpha)^2 log log t >= c fails: {lhs} < {c}"
        )));
    }
    Ok(())
}

/// The envelope for `S_{n,α}(t)`, inside the region where it is asserted.
pub fn envelope(n: i32, alpha: f64, t: f64, c: f64) -> Result<BoundEnvelope> {
    if !(c > 0.0) {
        return domain(format!("c must be positive, got {c}"));
    }
    region_check(alpha, t, c)?;
    envelope_unchecked(n, alpha, t, c)
}

/// Interpolation parameters for even `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InterpParams {
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
    /// `λ/log log t`, the width of the averaging window.
    pub nu: f64,
}

/// Weights and window width of the interpolation step. For `n = 0` only the
/// lower bound on `S_{−1,α}` is used, so the window is one-sided
/// (`a = 0, b = 1` for the lower bound; mirror it for the upper bound).
pub fn interp_params(n: i32, alpha: f64, t: f64) -> Result<InterpParams> {
    if n < 0 || n % 2 != 0 {
        return domain(format!("interpolation needs even n >= 0, got {n}"));
    }
    check_alpha(alpha)?;
    let ll = require_large_t(t)?;
    let up = odd_unchecked(n + 1, alpha, t, Sign::Plus)? + odd_unchecked(n + 1, alpha, t, Sign::Minus)?;
    let (a, b, lambda) = if n == 0 {
        let cm = odd_unchecked(-1, alpha, t, Sign::Minus)?;
        (0.0, 1.0, (2.0 * up / cm).sqrt())
    } else {
        let p = odd_unchecked(n - 1, alpha, t, Sign::Plus)?;
        let m = odd_unchecked(n - 1, alpha, t, Sign::Minus)?;
        let x = p / m;
        let a = x / (1.0 + x);
        (a, 1.0 - a, (2.0 * up * (p + m) / (p * m)).sqrt())
    };
    Ok(InterpParams {
        a,
        b,
        lambda,
        nu: lambda / ll,
    })
}

/// The bracket minimised by [`interp_params`]:
/// `[(C⁺_{n+1}+C⁻_{n+1})/(a+b)]/λ + [(b²C⁺_{n−1}+a²C⁻_{n−1})/(2(a+b))]λ`.
pub fn interp_bracket(n: i32, alpha: f64, t: f64, p: &InterpParams) -> Result<f64> {
    if n < 2 || n % 2 != 0 {
        return domain("the two-sided bracket needs even n >= 2");
    }
    let up = odd_unchecked(n + 1, alpha, t, Sign::Plus)? + odd_unchecked(n + 1, alpha, t, Sign::Minus)?;
    let cp = odd_unchecked(n - 1, alpha, t, Sign::Plus)?;
    let cm = odd_unchecked(n - 1, alpha, t, Sign::Minus)?;
    let s = p.a + p.b;
    Ok(up / s / p.lambda + (p.b * p.b * cp + p.a * p.a * cm) / (2.0 * s) * p.lambda)
}

/// Coarser fixed-α cap `(ω_n/(2^{n+1}π))(1 + (2α−1)/(α(1−α)) + slack)·ℓ_{n+1,α}(t)`,
/// with `ω_n = √2` for even `n` and 1 otherwise.
pub fn uniform_cap(n: i32, alpha: f64, t: f64, slack: f64) -> Result<f64> {
    if n < -1 {
        return domain(format!("n must be >= -1, got {n}"));
    }
    let omega = if n >= 0 && n % 2 == 0 { SQRT_2 } else { 1.0 };
    Ok(omega / (2f64.powi(n + 1) * PI) * (1.0 + alpha_term(alpha) + slack) * ell(n + 1, alpha, t)?)
}

/// Main term and error scale of the bound on `log|ζ(½+it)|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogZetaBound {
    pub t: f64,
    /// `(log 2/2)·log t/log log t`
    pub main: f64,
    /// `log t/(log log t)²`
    pub err_scale: f64,
}

pub fn logzeta_halfline_bound(t: f64) -> Result<LogZetaBound> {
    let ll = require_large_t(t)?;
    let l = t.ln();
    Ok(LogZetaBound {
        t,
        main: LN_2 / 2.0 * l / ll,
        err_scale: l / (ll * ll),
    })
}

/// Observed value of `S_{n,α}(t)` against its envelope.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnvelopeCheck {
    pub envelope: BoundEnvelope,
    pub observed: SnValue,
    pub slack: f64,
    pub lower: f64,
    pub upper: f64,
    pub inside: bool,
    /// `None` when `t` and `α` satisfy the hypotheses; otherwise which one
    /// fails. The envelope is still evaluated.
    pub region_violation: Option<String>,
}

/// Compare a measured `S_{n,α}(t)` with its envelope. Never fails on a
/// violation: the implied constants are unknown, so the outcome is an
/// observation, and the envelope is evaluated even outside its region.
pub fn check_envelope(observed: &SnValue, c: f64, slack: f64) -> Result<EnvelopeCheck> {
    let env = envelope_unchecked(observed.n, observed.alpha, observed.t, c)?;
    let region_violation = region_check(observed.alpha, observed.t, c).err().map(|e| e.to_string());
    let (lower, upper) = env.band(slack);
    let v = observed.value;
    Ok(EnvelopeCheck {
        envelope: env,
        observed: *observed,
        slack,
        lower,
        upper,
        inside: v >= lower && v <= upper,
        region_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::quad_adaptive;

    const T: f64 = 5.2e23; // just above e^{e^4}
    const HALF: f64 = 0.5 + 1e-9;

    #[test]
    fn first_odd_constants_at_the_critical_line() {
        let p = c_odd(1, HALF, T, Sign::Plus).unwrap();
        let m = c_odd(1, HALF, T, Sign::Minus).unwrap();
        assert!((p - PI / 48.0).abs() < 1e-6);
        assert!((m - PI / 24.0).abs() < 1e-6);
    }

    #[test]
    fn minus_one_minorant_constant() {
        let (a, t): (f64, f64) = (0.75, 1e30);
        let y = t.ln().powf(1.0 - 2.0 * a);
        let want = (1.0 / (1.0 + y) + alpha_term(a)) / PI;
        assert!((c_odd(-1, a, t, Sign::Minus).unwrap() - want).abs() < 1e-15);
        assert!(c_odd(-1, 0.5, t, Sign::Plus).is_err());
    }

    #[test]
    fn even_constants_match_critical_line_values() {
        assert!((c_even(0, HALF, T, Sign::Plus).unwrap() - 0.25).abs() < 1e-6);
        for n in [2, 4] {
            let v = c_even(n, 0.5, T, Sign::Minus).unwrap();
            let want = critical_line_constant(n as u32, Sign::Plus).unwrap();
            assert!((v - want).abs() < 1e-8, "n={n}: {v} vs {want}");
        }
    }

    #[test]
    fn odd_parity_alternates() {
        for n in [1, 3, 5, 7] {
            for s in [Sign::Plus, Sign::Minus] {
                let v = c_odd(n, 0.5, T, s).unwrap();
                let want = critical_line_constant(n as u32, s).unwrap();
                assert!((v - want).abs() < 1e-8, "n={n} {s:?}");
            }
        }
    }

    #[test]
    fn critical_line_values() {
        assert_eq!(critical_line_constant(0, Sign::Minus).unwrap(), 0.25);
        assert!((critical_line_constant(1, Sign::Minus).unwrap() - PI / 24.0).abs() < 1e-14);
        assert!((critical_line_constant(3, Sign::Plus).unwrap() - PI.powi(3) / 1440.0).abs() < 1e-14);
    }

    #[test]
    fn interpolation_reproduces_even_constants() {
        for n in [2, 4, 6] {
            for a in [0.55, 0.7, 0.9] {
                let p = interp_params(n, a, T).unwrap();
                assert_eq!(p.a + p.b, 1.0);
                assert!((0.5..=2.0).contains(&p.lambda));
                assert!(p.nu > 0.0 && p.nu <= 1.0);
                let bracket = interp_bracket(n, a, T, &p).unwrap();
                assert!((bracket - c_even(n, a, T, Sign::Plus).unwrap()).abs() < 1e-12);
            }
        }
        let p0 = interp_params(0, 0.75, T).unwrap();
        assert!((0.5..=2.0).contains(&p0.lambda));
    }

    #[test]
    fn envelope_shapes() {
        let env = envelope(1, 0.75, T, 0.1).unwrap();
        assert!(env.lower_main <= 0.0 && env.upper_main >= 0.0);
        let ll = T.ln().ln();
        assert!((env.err_scale - env.ell / (0.0625 * ll)).abs() < 1e-12 * env.err_scale);
        let e1 = envelope(-1, 0.75, T, 0.1).unwrap();
        assert!((e1.lower_err_scale * e1.upper_err_scale - e1.err_scale.powi(2)).abs() < 1e-9 * e1.err_scale.powi(2));
        assert!(matches!(envelope(0, 0.95, T, 0.1), Err(Error::Region(_))));
        assert!(matches!(envelope(0, 0.75, 1e6, 0.1), Err(Error::Region(_))));
    }

    #[test]
    fn logzeta_integral_identity() {
        let t = T;
        let l = t.ln();
        let ll = l.ln();
        let integral = quad_adaptive(|s| l.powf(2.0 - 2.0 * s) / (1.0 + l.powf(1.0 - 2.0 * s)), 0.5, 1.0, 1e-14).unwrap();
        let closed = LN_2 / 2.0 * l / ll - l * (1.0 / l).ln_1p() / (2.0 * ll);
        assert!((integral - closed).abs() < 1e-10);
        let b = logzeta_halfline_bound(std::f64::consts::E.powf(std::f64::consts::E.powi(4))).unwrap();
        assert!((b.main - LN_2 / 2.0 * std::f64::consts::E.powi(4) / 4.0).abs() < 1e-9);
    }
}
