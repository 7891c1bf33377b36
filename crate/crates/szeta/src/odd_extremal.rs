//! Extremal majorant/minorant of exponential type `2πΔ` for
//!
//! ```text
//! f_{2m+1,α}(x) = ½ ∫_α^{3/2} (σ−α)^{2m} log((1+x²)/((σ−½)²+x²)) dσ
//! ```
//!
//! The pair is built from the Hermite-type interpolation series of
//! `F_Δ(x) = f(x/Δ)` at the integers (majorant) or half-integers (minorant),
//! and rescaled: `g±(z) = G±(Δz)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numkit::{digamma, hurwitz_zeta, quad_adaptive, sum_tail_bounded};
use crate::Sign;

/// Default absolute tolerance for the interpolation series.
pub const DEFAULT_SERIES_TOL: f64 = 1e-12;
/// Default hard cap on the number of interpolation nodes per side.
pub const DEFAULT_N_MAX: usize = 200_000;

const NEAR_NODE: f64 = 1e-4;
// Beyond this the large-|x| expansion of f is used instead of quadrature.
const SERIES_RADIUS: f64 = 2.0;
const MOMENTS: usize = 48;

/// `γ_j = (2m)!/(2m+1−j)!` for `j = 0..=2m+1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaCoeffs {
    pub gamma_j: Vec<f64>,
}

impl GammaCoeffs {
    pub fn new(m: u32) -> Self {
        let top = 2 * m as usize + 1;
        let fact = |n: usize| (1..=n).map(|k| k as f64).product::<f64>();
        let f2m = fact(2 * m as usize);
        GammaCoeffs {
            gamma_j: (0..=top).map(|j| f2m / fact(top - j)).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OddExtremalPair {
    m: u32,
    alpha: f64,
    delta: f64,
    series_tol: f64,
    n_max: usize,
    beta: f64,
    len: f64,
    // M_k = ∫(σ−α)^{2m}(1 − (σ−½)^{2k}) dσ, k = 1..
    moments: Vec<f64>,
    gamma: GammaCoeffs,
    // (F(ν), F′(ν)) at ν = j and ν = j + ½
    nodes_int: Vec<(f64, f64)>,
    nodes_half: Vec<(f64, f64)>,
}

impl OddExtremalPair {
    /// `m ≥ 0`, `½ ≤ α < 1`, `Δ ≥ 1`, default tolerances.
    pub fn new(m: u32, alpha: f64, delta: f64) -> Result<Self> {
        Self::with_options(m, alpha, delta, DEFAULT_SERIES_TOL, DEFAULT_N_MAX)
    }

    pub fn with_options(m: u32, alpha: f64, delta: f64, series_tol: f64, n_max: usize) -> Result<Self> {
        if !(0.5..1.0).contains(&alpha) {
            return domain(format!("alpha must lie in [1/2, 1), got {alpha}"));
        }
        if !(delta >= 1.0) || !delta.is_finite() {
            return domain(format!("delta must be >= 1, got {delta}"));
        }
        if !(series_tol > 0.0) {
            return domain("series tolerance must be positive");
        }
        if m > 20 {
            return domain(format!("m = {m} is beyond the supported range (m <= 20)"));
        }
        if (n_max as f64) < 10.0 * delta {
            return domain(format!("n_max = {n_max} must be at least 10*delta"));
        }
        let beta = alpha - 0.5;
        let len = 1.5 - alpha;
        let moments = (1..=MOMENTS).map(|k| moment(m, beta, len, k)).collect();
        let mut pair = OddExtremalPair {
            m,
            alpha,
            delta,
            series_tol,
            n_max,
            beta,
            len,
            moments,
            gamma: GammaCoeffs::new(m),
            nodes_int: Vec::new(),
            nodes_half: Vec::new(),
        };
        let table = pair.terms_needed(0.0, 1.0).min(n_max) + 2;
        pair.nodes_int = (0..table).map(|j| pair.node_values(j as f64)).collect();
        pair.nodes_half = (0..table).map(|j| pair.node_values(j as f64 + 0.5)).collect();
        Ok(pair)
    }

    /// Precompute the interpolation nodes needed for `|x| ≤ x_max`, so that
    /// repeated evaluation far from the origin does not recompute them.
    pub fn extend_nodes(&mut self, x_max: f64) {
        let want = self.terms_needed(self.delta * x_max.abs(), 1.0).min(self.n_max) + 2;
        for j in self.nodes_int.len()..want {
            let v = self.node_values(j as f64);
            self.nodes_int.push(v);
        }
        for j in self.nodes_half.len()..want {
            let v = self.node_values(j as f64 + 0.5);
            self.nodes_half.push(v);
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn series_tol(&self) -> f64 {
        self.series_tol
    }
    pub fn gamma_coeffs(&self) -> &GammaCoeffs {
        &self.gamma
    }

    fn weight(&self, sigma: f64) -> f64 {
        (sigma - self.alpha).powi(2 * self.m as i32)
    }

    /// `f_{2m+1,α}(x)`.
    pub fn f_odd(&self, x: f64) -> f64 {
        let x = x.abs();
        if x >= SERIES_RADIUS {
            // ½ Σ_{k≥1} (−1)^{k+1} M_k / (k x^{2k})
            let y = 1.0 / (x * x);
            let mut acc = 0.0;
            for (i, mk) in self.moments.iter().enumerate().rev() {
                let k = (i + 1) as f64;
                let sgn = if i % 2 == 0 { 1.0 } else { -1.0 };
                acc = acc * y + sgn * mk / k;
            }
            return 0.5 * acc * y;
        }
        let x2 = x * x;
        let g = |sigma: f64| {
            let s = sigma - 0.5;
            self.weight(sigma) * ((1.0 - s * s) / (s * s + x2)).ln_1p()
        };
        let v = quad_adaptive(g, self.alpha, 1.5, 1e-14).unwrap_or_else(best_effort);
        0.5 * v
    }

    /// `f_{2m,α}(x) = −f′_{2m+1,α}(x)`; odd in `x`.
    pub fn f_even(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        if x < 0.0 {
            return -self.f_even(-x);
        }
        if x >= SERIES_RADIUS {
            let y = 1.0 / (x * x);
            let mut acc = 0.0;
            for (i, mk) in self.moments.iter().enumerate().rev() {
                let sgn = if i % 2 == 0 { 1.0 } else { -1.0 };
                acc = acc * y + sgn * mk;
            }
            return acc * y / x;
        }
        let x2 = x * x;
        let g = |sigma: f64| {
            let s = sigma - 0.5;
            self.weight(sigma) * x * (1.0 - s * s) / ((s * s + x2) * (1.0 + x2))
        };
        quad_adaptive(g, self.alpha, 1.5, 1e-14).unwrap_or_else(best_effort)
    }

    /// `∫ f_{2m+1,α}`.
    pub fn f_integral(&self) -> f64 {
        let p = 2 * self.m as i32 + 2;
        PI * self.len.powi(p) / ((p - 1) * p) as f64
    }

    /// Fourier transform of `f_{2m+1,α}` itself:
    /// `∫ (σ−α)^{2m} (e^{−2π(σ−½)|ξ|} − e^{−2π|ξ|})/(2|ξ|) dσ`.
    pub fn ft_f(&self, xi: f64) -> f64 {
        let x = xi.abs();
        if x == 0.0 {
            return self.f_integral();
        }
        let a = 2.0 * PI * x;
        let g = |sigma: f64| {
            let s = sigma - 0.5;
            // e^{−as} − e^{−a} = e^{−a} expm1(a(1−s))
            self.weight(sigma) * (-a).exp() * (a * (1.0 - s)).exp_m1()
        };
        quad_adaptive(g, self.alpha, 1.5, 1e-15).unwrap_or_else(best_effort) / (2.0 * x)
    }

    /// Uniform constant `A` with `f(x) ≤ A/x²` and `|f_{2m}(x)| ≤ 2A/|x|³`.
    pub fn decay_a(&self) -> f64 {
        0.5 * self.moments[0]
    }

    fn node_values(&self, nu: f64) -> (f64, f64) {
        let x = nu / self.delta;
        let f = self.f_odd(x);
        // F′ at the origin is dropped from the series (F need not be
        // differentiable there when α = ½, m = 0).
        let fp = if nu == 0.0 { 0.0 } else { -self.f_even(x) / self.delta };
        (f, fp)
    }

    /// `(F(ν), F′(ν))` for `ν ≥ 0`, from the table when possible.
    fn node(&self, half: bool, j: usize) -> (f64, f64) {
        let table = if half { &self.nodes_half } else { &self.nodes_int };
        match table.get(j) {
            Some(&v) => v,
            None => self.node_values(j as f64 + if half { 0.5 } else { 0.0 }),
        }
    }

    /// Bound on the dropped part of the series once all nodes with
    /// `|ν| ≤ N` are kept, valid for `N − 1 ≥ 2|w|`.
    fn tail_bound(&self, n: usize, cosh2: f64) -> f64 {
        let d2 = self.delta * self.delta;
        16.0 * cosh2 * self.decay_a() * d2 / (3.0 * PI * PI * ((n as f64) - 1.0).powi(3))
    }

    fn terms_needed(&self, abs_w: f64, cosh2: f64) -> usize {
        let d2 = self.delta * self.delta;
        let by_tol = (16.0 * cosh2 * self.decay_a() * d2 / (3.0 * PI * PI * self.series_tol)).cbrt();
        let by_tol = if by_tol.is_finite() { by_tol } else { f64::MAX };
        let floor = (10.0 * self.delta).max(50.0 + 20.0 * abs_w / self.delta);
        (floor.max(2.0 * abs_w + 1.0).max(by_tol) + 2.0).ceil().min(1e15) as usize
    }

    fn plan(&self, w: Complex64) -> Result<(usize, f64)> {
        let cosh2 = (PI * w.im).cosh().powi(2);
        let n = self.terms_needed(w.norm(), cosh2);
        if n > self.n_max {
            return Err(Error::Accuracy {
                msg: format!(
                    "interpolation series needs {n} nodes for tolerance {:e}, cap is {}",
                    self.series_tol, self.n_max
                ),
                best: f64::NAN,
                err: self.tail_bound(self.n_max, cosh2),
            });
        }
        Ok((n, self.tail_bound(n, cosh2)))
    }

    /// `g±(x)` on the real line.
    pub fn g(&self, sign: Sign, x: f64) -> Result<f64> {
        let w = self.delta * x.abs();
        let (n, _) = self.plan(Complex64::new(w, 0.0))?;
        let r = w.round();
        let frac = w - r;
        let parity = if (r as i64) % 2 == 0 { 1.0 } else { -1.0 };
        let half = sign == Sign::Minus;
        let s = match sign {
            Sign::Plus => parity * (PI * frac).sin(),
            Sign::Minus => parity * (PI * frac).cos(),
        };
        let mut far = 0.0;
        let mut near = 0.0;
        for j in (0..=n).rev() {
            let (f, fp) = self.node(half, j);
            let nu = j as f64 + if half { 0.5 } else { 0.0 };
            let mut add = |d: f64, fp: f64| {
                if d.abs() < NEAR_NODE {
                    let sc = crate::numkit::sinc(d);
                    near += sc * sc * (f + d * fp);
                } else {
                    far += f / (d * d) + fp / d;
                }
            };
            add(w - nu, fp);
            if nu != 0.0 {
                add(w + nu, -fp);
            }
        }
        Ok((s / PI).powi(2) * far + near)
    }

    /// `g±(z)` for complex `z`.
    pub fn g_complex(&self, sign: Sign, z: Complex64) -> Result<Complex64> {
        // even function: fold into the right half-plane
        let z = if z.re < 0.0 { -z } else { z };
        let w = z * self.delta;
        let (n, _) = self.plan(w)?;
        let r = w.re.round();
        let frac = w - r;
        let parity = if (r as i64) % 2 == 0 { 1.0 } else { -1.0 };
        let half = sign == Sign::Minus;
        let s = match sign {
            Sign::Plus => (frac * PI).sin() * parity,
            Sign::Minus => (frac * PI).cos() * parity,
        };
        let zero = Complex64::new(0.0, 0.0);
        let mut far = zero;
        let mut near = zero;
        for j in (0..=n).rev() {
            let (f, fp) = self.node(half, j);
            let nu = j as f64 + if half { 0.5 } else { 0.0 };
            let mut add = |d: Complex64, fp: f64| {
                if d.norm() < NEAR_NODE {
                    let sc = crate::poisson_extremal::csinc(d);
                    near += sc * sc * (d * fp + f);
                } else {
                    let inv = d.inv();
                    far += inv * (inv * f + fp);
                }
            };
            add(w - nu, fp);
            if nu != 0.0 {
                add(w + nu, -fp);
            }
        }
        Ok((s / PI) * (s / PI) * far + near)
    }

    /// Truncation bound attached to `g±(z)` at the default node count.
    pub fn g_error_bound(&self, z: Complex64) -> Result<f64> {
        self.plan(z * self.delta).map(|(_, b)| b)
    }

    /// `∫_0^L u^{2m}(e^{−a(u+β)} − e^{−a}) du`, the bracket of the FT series.
    fn t_bracket(&self, a: f64) -> f64 {
        let l = self.len;
        if a * l > 40.0 {
            return self.t_closed(a);
        }
        let p = 2 * self.m as i32;
        let g = |u: f64| u.powi(p) * (a * (l - u)).exp_m1();
        (-a).exp() * quad_adaptive(g, 0.0, l, 1e-16).unwrap_or_else(best_effort)
    }

    fn t_closed(&self, a: f64) -> f64 {
        let f2m = self.gamma.gamma_j[2 * self.m as usize + 1];
        f2m * (-a * self.beta).exp() / a.powi(2 * self.m as i32 + 1) - (-a).exp() * self.poly_p(a)
    }

    /// `P(a) = Σ_j γ_j L^{2m+1−j} / a^j`.
    fn poly_p(&self, a: f64) -> f64 {
        let top = 2 * self.m as usize + 1;
        self.gamma
            .gamma_j
            .iter()
            .enumerate()
            .map(|(j, g)| g * self.len.powi((top - j) as i32) / a.powi(j as i32))
            .sum()
    }

    /// `ĝ±(ξ)`; even, supported on `[−Δ, Δ]`.
    pub fn ft_g(&self, sign: Sign, xi: f64) -> Result<f64> {
        let x = xi.abs();
        if x >= self.delta {
            return Ok(0.0);
        }
        if x == 0.0 {
            return Ok(self.ft_g_zero(sign));
        }
        let d = self.delta;
        let head = 0.5 * self.t_bracket(2.0 * PI * x) / x;
        let pm = sign.as_f64();
        // term at index k (k ≠ 0, −1): ½(±1)^k (k+1)/|ξ+kΔ| · T(2π|ξ+kΔ|)
        let weight = |k: i64| {
            let eta = (x + k as f64 * d).abs();
            let s = if k % 2 == 0 { 1.0 } else { pm };
            (0.5 * s * (k + 1) as f64 / eta, 2.0 * PI * eta)
        };
        let two_pi_d = 2.0 * PI * d;
        let q = (-two_pi_d).exp();
        let e_const: f64 = {
            let top = 2 * self.m as usize + 1;
            self.gamma
                .gamma_j
                .iter()
                .enumerate()
                .map(|(j, g)| g * self.len.powi((top - j) as i32) / two_pi_d.powi(j as i32))
                .sum()
        };
        if self.beta == 0.0 {
            let power = self.power_part_critical(sign, x);
            let expo = sum_tail_bounded(
                |i| {
                    let k = i as i64 + 1;
                    let (w1, a1) = weight(k);
                    let (w2, a2) = weight(-k - 1);
                    -(w1 * (-a1).exp() * self.poly_p(a1) + w2 * (-a2).exp() * self.poly_p(a2))
                },
                |i| 3.0 / d * e_const * q.powi(i as i32) / (1.0 - q),
                1e-15,
            )?;
            return Ok(head + power + expo.value);
        }
        let r = (-two_pi_d * self.beta).exp();
        let f2m = self.gamma.gamma_j[2 * self.m as usize + 1];
        let lead = f2m / two_pi_d.powi(2 * self.m as i32 + 1);
        let body = sum_tail_bounded(
            |i| {
                let k = i as i64 + 1;
                let (w1, a1) = weight(k);
                let (w2, a2) = weight(-k - 1);
                w1 * self.t_closed(a1) + w2 * self.t_closed(a2)
            },
            |i| {
                let i = i as i32;
                3.0 / d * (lead * r.powi(i) / (1.0 - r) + e_const * q.powi(i) / (1.0 - q))
            },
            1e-13,
        )?;
        Ok(head + body.value)
    }

    /// Power-law part `(2m)!/(2(2π)^{2m+1}) Σ_{k≠0} (±1)^k (k+1)/|ξ+kΔ|^{2m+2}`
    /// at `α = ½`, summed in closed form with Hurwitz zeta values.
    fn power_part_critical(&self, sign: Sign, x_abs: f64) -> f64 {
        let m = self.m as i32;
        let p = 2 * m + 2;
        let c = self.gamma.gamma_j[2 * self.m as usize + 1] / (2.0 * (2.0 * PI).powi(2 * m + 1));
        let x = x_abs / self.delta;
        let y = 1.0 - x;
        let pf = p as f64;
        let bracket = match sign {
            Sign::Plus => {
                let diff = if p == 2 {
                    digamma(1.0 + y) - digamma(1.0 + x)
                } else {
                    hz(pf - 1.0, 1.0 + x) - hz(pf - 1.0, 1.0 + y)
                };
                diff + y * hz(pf, 1.0 + x) + y * hz(pf, 1.0 + y)
            }
            Sign::Minus => {
                -alt_hz(pf - 1.0, 1.0 + x) - y * alt_hz(pf, 1.0 + x) - alt_hz(pf - 1.0, 1.0 + y)
                    + y * alt_hz(pf, 1.0 + y)
            }
        };
        c * self.delta.powi(-p) * bracket
    }

    /// `∫ (σ−α)^{2m} log((1 ∓ e^{−2π(σ−½)Δ})/(1 ∓ e^{−2πΔ})) dσ`.
    fn log_sigma_integral(&self, sign: Sign) -> f64 {
        let d = self.delta;
        let lg = |y: f64| match sign {
            Sign::Plus => (-(-y).exp_m1()).ln(),
            Sign::Minus => (-y).exp().ln_1p(),
        };
        let base = lg(2.0 * PI * d);
        let g = |sigma: f64| self.weight(sigma) * (lg(2.0 * PI * (sigma - 0.5) * d) - base);
        quad_adaptive(g, self.alpha, 1.5, 1e-14).unwrap_or_else(best_effort)
    }

    fn ft_g_zero(&self, sign: Sign) -> f64 {
        self.f_integral() - self.log_sigma_integral(sign) / self.delta
    }

    /// `∫(g⁺ − f)` for `Plus`, `∫(f − g⁻)` for `Minus`.
    pub fn l1_gap(&self, sign: Sign) -> f64 {
        match sign {
            Sign::Plus => -self.log_sigma_integral(sign) / self.delta,
            Sign::Minus => self.log_sigma_integral(sign) / self.delta,
        }
    }

    /// Empirical constant `K` with `|g±(x)| ≤ K/(1+x²)`: twice the largest
    /// ratio seen on a grid. The decay itself is proven; the constant is not.
    pub fn decay_constant(&self, sign: Sign) -> Result<f64> {
        let mut worst: f64 = 0.0;
        let step = 0.25 / self.delta;
        let mut x: f64 = 0.0;
        while x <= 60.0 {
            worst = worst.max(self.g(sign, x)?.abs() * (1.0 + x * x));
            x += step;
        }
        // beyond the grid f dominates: f(x) ≤ A/x² ≤ 2A/(1+x²)
        Ok(2.0 * worst.max(2.0 * self.decay_a()))
    }
}

fn best_effort(e: Error) -> f64 {
    match e {
        Error::Accuracy { best, .. } => best,
        _ => f64::NAN,
    }
}

fn hz(s: f64, q: f64) -> f64 {
    hurwitz_zeta(s, q).expect("s > 1, q > 0")
}

/// `Σ_{j≥0} (−1)^j (j+q)^{−s}`.
fn alt_hz(s: f64, q: f64) -> f64 {
    if s == 1.0 {
        0.5 * (digamma(0.5 * (q + 1.0)) - digamma(0.5 * q))
    } else {
        2f64.powf(-s) * (hz(s, 0.5 * q) - hz(s, 0.5 * (q + 1.0)))
    }
}

/// `∫_0^L u^{2m} (1 − (u+β)^{2k}) du` via the binomial expansion.
fn moment(m: u32, beta: f64, len: f64, k: usize) -> f64 {
    let m2 = 2 * m as i32;
    let whole = len.powi(m2 + 1) / (m2 + 1) as f64;
    let two_k = 2 * k;
    let mut part = 0.0;
    let mut binom = 1.0;
    for j in 0..=two_k {
        if j > 0 {
            binom *= (two_k - j + 1) as f64 / j as f64;
        }
        let e = m2 + j as i32 + 1;
        part += binom * beta.powi((two_k - j) as i32) * len.powi(e) / e as f64;
    }
    whole - part
}
