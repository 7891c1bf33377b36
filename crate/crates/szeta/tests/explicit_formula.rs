use std::f64::consts::PI;
use std::sync::OnceLock;

use szeta::explicit_formula::*;
use szeta::numkit::{sieve_mangoldt, MangoldtTable};
use szeta::odd_extremal::OddExtremalPair;
use szeta::poisson_extremal::PoissonExtremalPair;
use szeta::zeta_core::{load_zeros, s_n_direct, ZeroTable};
use szeta::Sign;

fn zeros() -> &'static ZeroTable {
    static Z: OnceLock<ZeroTable> = OnceLock::new();
    Z.get_or_init(|| load_zeros(concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_2000.txt")).unwrap())
}

// covers e^{2πΔ} for Δ ≤ 2.5
fn table() -> &'static MangoldtTable {
    static T: OnceLock<MangoldtTable> = OnceLock::new();
    T.get_or_init(|| sieve_mangoldt(6_700_000).unwrap())
}

#[test]
fn poisson_prime_sum_matches_rearranged_form() {
    let (beta, delta, t) = (0.25, 1.5, 50.0);
    let pair = PoissonExtremalPair::new(beta, delta).unwrap();
    let x = (2.0 * PI * delta).exp();
    let e = (-2.0 * PI * beta * delta).exp();
    for (sign, den) in [(Sign::Plus, (1.0 - e).powi(2)), (Sign::Minus, (1.0 + e).powi(2))] {
        let direct = prime_sum(|xi| Ok(pair.ft_m(sign, xi)), t, delta, table()).unwrap();
        let mut acc = 0.0;
        for (n, lam) in table().prime_powers(x) {
            let nf = n as f64;
            acc += lam / nf.sqrt() * (1.0 / (e * nf.powf(beta)) - nf.powf(beta) * e) * (t * nf.ln()).cos();
        }
        let rearranged = e / den * acc;
        assert!((direct - rearranged).abs() < 1e-10 * (1.0 + rearranged.abs()), "{sign:?}: {direct} vs {rearranged}");
    }
}

#[test]
fn gw_identity_holds_to_truncation_for_poisson() {
    for sign in [Sign::Plus, Sign::Minus] {
        let r = gw_evaluate(KernelSpec::Poisson { beta: 0.25 }, sign, 50.0, 1.5, zeros(), table()).unwrap();
        assert!(r.within(1e-6), "{r:?}");
        assert!(r.zero_tail_bound >= 0.0 && r.prime_tail_bound >= 0.0);
        let k0 = PoissonExtremalPair::new(0.25, 1.5).unwrap().ft_m(sign, 0.0);
        assert!((r.log_pi_term - k0 * PI.ln() / (2.0 * PI)).abs() < 1e-15);
    }
}

#[test]
fn gw_identity_holds_to_truncation_for_odd_kernels() {
    for (m, alpha) in [(0, 0.75), (1, 0.6)] {
        let r = gw_evaluate(KernelSpec::Odd { m, alpha }, Sign::Minus, 100.0, 2.0, zeros(), table()).unwrap();
        assert!(r.within(1e-6), "{r:?}");
    }
}

#[test]
fn gw_residual_shrinks_with_more_zeros() {
    let z500 = zeros().truncated(500);
    for spec in [KernelSpec::Poisson { beta: 0.25 }, KernelSpec::Odd { m: 0, alpha: 0.75 }] {
        for (t, d) in [(50.0, 1.5), (100.0, 2.0)] {
            let small = gw_evaluate(spec, Sign::Plus, t, d, &z500, table()).unwrap();
            let full = gw_evaluate(spec, Sign::Plus, t, d, zeros(), table()).unwrap();
            assert!(full.residual.abs() < small.residual.abs(), "{spec} at {t}");
            assert!(full.zero_tail_bound < small.zero_tail_bound);
        }
    }
}

#[test]
fn zero_tail_decreases_when_table_doubles() {
    let env = Kernel::build(KernelSpec::Poisson { beta: 0.25 }, 1.5).unwrap().envelope(Sign::Plus).unwrap();
    let half = zero_tail_bound(env, 50.0, &zeros().truncated(1000)).unwrap();
    let full = zero_tail_bound(env, 50.0, zeros()).unwrap();
    assert!(full < half && full > 0.0);
}

#[test]
fn poisson_envelopes_bracket_prime_sums() {
    for beta in [0.1, 0.2, 0.3, 0.4, 0.45] {
        for delta in [1.0, 1.5, 2.0, 2.5] {
            let pair = PoissonExtremalPair::new(beta, delta).unwrap();
            for t in [0.0, 37.5] {
                let plus = prime_sum(|xi| Ok(pair.ft_m(Sign::Plus, xi)), t, delta, table()).unwrap();
                let lo = prime_sum_envelope_poisson(Sign::Plus, beta, delta).unwrap()
                    - 10.0 * poisson_envelope_error_scale(Sign::Plus, beta, delta);
                assert!(plus >= lo, "beta={beta} delta={delta} t={t}: {plus} < {lo}");
                let minus = prime_sum(|xi| Ok(pair.ft_m(Sign::Minus, xi)), t, delta, table()).unwrap();
                let hi = prime_sum_envelope_poisson(Sign::Minus, beta, delta).unwrap()
                    + 10.0 * poisson_envelope_error_scale(Sign::Minus, beta, delta);
                assert!(minus <= hi, "beta={beta} delta={delta} t={t}: {minus} > {hi}");
            }
        }
    }
}

#[test]
fn odd_envelopes_bound_prime_sums() {
    for m in [0, 1] {
        for alpha in [0.6, 0.75] {
            for delta in [1.0, 1.5, 2.0] {
                let Ok(env) = prime_sum_envelope_odd(m, alpha, delta, 0.1) else { continue };
                let pair = OddExtremalPair::new(m, alpha, delta).unwrap();
                for sign in [Sign::Plus, Sign::Minus] {
                    let s = prime_sum(|xi| pair.ft_g(sign, xi), 0.0, delta, table()).unwrap();
                    let lhs = -sign.as_f64() * s;
                    assert!(lhs <= env.main + 10.0 * env.error_scale, "m={m} alpha={alpha} delta={delta} {sign:?}");
                }
            }
        }
    }
}

#[test]
fn rep_sum_tracks_direct_values() {
    let rep = rep_sum(-1, 0.75, 100.0, zeros()).unwrap();
    let direct = s_n_direct(-1, 0.75, 100.0).unwrap();
    assert!((rep.value - direct.value).abs() <= 0.05 + rep.est_error, "{rep:?} vs {direct:?}");

    let rep = rep_sum(1, 0.6, 100.0, zeros()).unwrap();
    let direct = s_n_direct(1, 0.6, 100.0).unwrap();
    assert!((rep.value - direct.value).abs() <= 5.0 + rep.est_error);
}

#[test]
fn rep_sum_is_stable_under_declared_precision() {
    let z = zeros();
    let t = 100.0;
    let base = rep_sum(-1, 0.75, t, z).unwrap().value;
    let bound = 10.0 * z.precision() * rep_sum_sensitivity(-1, 0.75, t, z).unwrap();
    for shift in [z.precision(), -z.precision()] {
        let moved = rep_sum(-1, 0.75, t, &z.shifted(shift)).unwrap().value;
        // the log(t/2π) term is untouched, so compare the sums directly
        assert!((moved - base).abs() <= bound.max(4.0 * f64::EPSILON * base.abs()));
    }
}

#[test]
fn appendix_items_that_hold_on_the_grid() {
    for x in [1e5, 1e6] {
        for alpha in [0.7, 0.8] {
            for m in [0, 1] {
                let p = AppendixParams { x, alpha, m, ..Default::default() };
                let a3 = appendix_asymptotic(AppendixId::A3, &p, None).unwrap();
                assert!(a3.holds(10.0), "{a3:?}");
                let b3 = appendix_asymptotic(AppendixId::B3, &p, Some(table())).unwrap();
                assert!(b3.holds(10.0), "{b3:?}");
                let a4 = appendix_asymptotic(AppendixId::A4, &p, None).unwrap();
                assert!(a4.holds(1.0));
            }
        }
    }
}

#[test]
fn b2_and_b4_ratios_improve_with_x() {
    for (alpha, m) in [(0.7, 0), (0.8, 1)] {
        let gaps: Vec<f64> = [1e4, 1e5, 1e6]
            .iter()
            .map(|&x| {
                let p = AppendixParams { x, alpha, m, ..Default::default() };
                let c = appendix_asymptotic(AppendixId::B2, &p, Some(table())).unwrap();
                assert!(c.holds(10.0));
                c.relative_gap()
            })
            .collect();
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
    }
    let gaps: Vec<f64> = [1e4, 1e5, 1e6]
        .iter()
        .map(|&x| {
            let p = AppendixParams { x, beta: 0.25, ..Default::default() };
            appendix_asymptotic(AppendixId::B4, &p, Some(table())).unwrap().relative_gap()
        })
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
}

#[test]
fn b1_sum_against_trial_division() {
    // independent Λ(n) by factoring each n
    fn lambda(n: u64) -> f64 {
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                let mut k = n;
                while k.is_multiple_of(p) {
                    k /= p;
                }
                return if k == 1 { (p as f64).ln() } else { 0.0 };
            }
            p += 1;
        }
        (n as f64).ln()
    }
    let (x, alpha) = (20_000.0, 0.75);
    let brute: f64 = (2..=20_000u64)
        .map(|n| {
            let nf = n as f64;
            lambda(n) / (nf.powf(alpha) * nf.ln().powi(2))
        })
        .sum();
    let p = AppendixParams { x, alpha, m: 0, ..Default::default() };
    let c = appendix_asymptotic(AppendixId::B1, &p, Some(table())).unwrap();
    assert!((c.direct - brute).abs() < 1e-10 * brute);
}
