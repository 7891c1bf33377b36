use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use proptest::prelude::*;
use szeta::numkit::quad_breakpoints;
use szeta::zeta_core::*;

/// Dirichlet eta by Borwein's alternating-series acceleration (real s > 0).
fn eta(s: f64) -> f64 {
    let n = 40usize;
    let mut d = vec![0.0; n + 1];
    let mut term = 1.0;
    let mut acc = 0.0;
    for i in 0..=n {
        acc += term;
        d[i] = acc;
        let fi = i as f64;
        let nf = n as f64;
        term *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
    }
    let dn = d[n];
    let mut sum = 0.0;
    for k in 0..n {
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sgn * (d[k] - dn) / ((k + 1) as f64).powf(s);
    }
    -sum / dn
}

/// log|ζ(σ)| through η(σ) = (1 − 2^{1−σ}) ζ(σ).
fn log_abs_zeta_eta(sigma: f64) -> f64 {
    let denom = -((1.0 - sigma) * LN_2).exp_m1();
    eta(sigma).abs().ln() - denom.abs().ln()
}

#[test]
fn eta_route_reproduces_known_zeta_values() {
    assert!((log_abs_zeta_eta(2.0) - (PI * PI / 6.0f64).ln()).abs() < 1e-13);
    assert!((log_abs_zeta_eta(0.5) - 1.460_354_508_809_586_8f64.ln()).abs() < 1e-13);
}

#[test]
fn delta_one_against_eta_route() {
    for alpha in [0.5, 0.75, 0.9] {
        let tail_from = 60.0;
        let oracle = quad_breakpoints(log_abs_zeta_eta, alpha, tail_from, &[1.0, 2.0, 4.0], 1e-12).unwrap() / PI;
        let got = delta_const(1, alpha).unwrap();
        assert!((got - oracle).abs() < 1e-8, "alpha={alpha}: {got} vs {oracle}");
    }
}

#[test]
fn delta_three_against_nested_quadrature() {
    // δ_3 = −(1/π) ∫_α^∞ ∫_{σ₂}^∞ ∫_{σ₁}^∞ log|ζ|; the inner pair is one
    // weighted integral, the outer one is done numerically on top of it.
    let alpha = 0.9;
    let top = 60.0;
    let inner = |s2: f64| {
        let f = |s0: f64| (s0 - s2) * log_abs_zeta_eta(s0);
        quad_breakpoints(f, s2, top, &[1.0, 2.0, 4.0], 1e-12).unwrap()
    };
    let outer = quad_breakpoints(inner, alpha, top, &[1.0, 2.0, 4.0], 1e-10).unwrap();
    let oracle = -outer / PI;
    let got = delta_const(3, alpha).unwrap();
    assert!((got - oracle).abs() < 1e-8, "{got} vs {oracle}");
}

#[test]
fn s0_far_right_matches_principal_log() {
    // For σ ≥ 1.5, |log ζ| < π so the principal argument is the continuous one.
    for t in [7.0, 40.0, 123.4] {
        let z = zeta(Complex64::new(1.5, t), 1e-14).unwrap();
        let v = s_n_direct(0, 1.5, t).unwrap().value;
        assert!((v - z.arg() / PI).abs() < 1e-9, "t={t}");
        let l = log_zeta_dirichlet(Complex64::new(2.5, t), 1e-11).unwrap();
        let v = s_n_direct(0, 2.5, t).unwrap().value;
        assert!((v - l.im / PI).abs() < 1e-9, "t={t}");
    }
}

#[test]
fn count_and_integral_routes_to_s_agree() {
    let table = ZeroTable::bundled();
    let t = 100.5;
    let (_, s_count) = count_zeros(t, &table).unwrap();
    let s_direct = s_n_direct(0, 0.5, t).unwrap().value;
    assert!((s_count - s_direct).abs() < 2e-2 + 1.0 / t, "{s_count} vs {s_direct}");
}

#[test]
fn s01_sanity_window_at_ten_thousand() {
    let t = 1e4f64;
    let v = s_n_direct(0, 1.0, t).unwrap().value;
    let bound = t.ln().ln().ln() / PI + 5.0;
    assert!(v.abs() <= bound, "{v}");
}

#[test]
fn bundled_zeros_are_zeros() {
    for g in ZeroTable::bundled().ordinates().iter().take(20) {
        let z = zeta(Complex64::new(0.5, *g), 1e-14).unwrap();
        assert!(z.norm() < 1e-6, "gamma={g}");
    }
}

#[test]
fn loads_three_zero_file() {
    let dir = std::env::temp_dir().join(format!("szeta-zeros-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("z.txt");
    std::fs::write(&p, "14.134725142\n21.022039639\n25.010857580").unwrap();
    let t = load_zeros(&p).unwrap();
    assert_eq!(t.len(), 3);
    std::fs::remove_dir_all(&dir).ok();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]
    #[test]
    fn antiderivative_chain(t in 50.0f64..500.0) {
        let h = 1e-3;
        for alpha in [0.6, 0.75] {
            for n in 0..3 {
                let p = s_n_direct(n + 1, alpha, t + h).unwrap().value;
                let m = s_n_direct(n + 1, alpha, t - h).unwrap().value;
                let s = s_n_direct(n, alpha, t).unwrap().value;
                prop_assert!(((p - m) / (2.0 * h) - s).abs() < 1e-3, "n={} alpha={} t={}", n, alpha, t);
            }
        }
    }
}
