//! Real Hurwitz/Riemann zeta and Bernoulli numbers.

use crate::error::{domain, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `B_2, B_4, ..., B_30`.
pub const BERNOULLI_2K: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Hurwitz zeta `ζ(s, q) = Σ_{k≥0} (k+q)^{-s}` for real `s > 1`, `q > 0`.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if !(s > 1.0) || !(q > 0.0) {
        return domain(format!("hurwitz_zeta needs s > 1 and q > 0, got s={s}, q={q}"));
    }
    // Large s: the leading terms dominate and converge geometrically.
    if s > 60.0 {
        let mut sum = 0.0;
        for k in 0..64 {
            let term = (k as f64 + q).powf(-s);
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
        }
        return Ok(sum);
    }
    const N: usize = 12;
    let mut sum = 0.0;
    for k in 0..N {
        sum += (k as f64 + q).powf(-s);
    }
    let a = N as f64 + q;
    let a_s = a.powf(-s);
    let mut tail = a * a_s / (s - 1.0) + 0.5 * a_s;
    // Euler–Maclaurin corrections B_2k/(2k)! · s(s+1)…(s+2k−2) · a^{-s-2k+1}
    let mut poch = s; // s(s+1)…(s+2k−2)
    let mut fact = 2.0; // (2k)!
    let mut pow = a_s / a; // a^{-s-2k+1}
    for (k, b) in BERNOULLI_2K.iter().enumerate() {
        let term = b / fact * poch * pow;
        tail += term;
        if term.abs() < 1e-17 * (sum + tail).abs() {
            break;
        }
        let kk = (k + 1) as f64;
        poch *= (s + 2.0 * kk - 1.0) * (s + 2.0 * kk);
        fact *= (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
        pow /= a * a;
    }
    Ok(sum + tail)
}

/// Riemann zeta on the real line for `s > 1`.
pub fn zeta_real(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 1.0)
}

/// `ζ(1 − 2k)` for `k ≥ 1` through the functional equation, which only needs
/// `ζ(2k)`; avoids tabulating Bernoulli numbers past `B_30`.
pub(crate) fn zeta_negative_odd(k: u32) -> f64 {
    let two_k = 2 * k;
    let z = zeta_real(two_k as f64).expect("2k >= 2");
    let mut v = 2.0 * z;
    // (2k−1)!/(2π)^{2k}, built up to stay in range.
    let tau = 2.0 * std::f64::consts::PI;
    for j in 1..two_k {
        v *= j as f64 / tau;
    }
    v /= tau;
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `ζ(j)` for any integer `j ≠ 1`.
pub(crate) fn zeta_integer(j: i64) -> f64 {
    match j {
        0 => -0.5,
        1 => f64::INFINITY,
        j if j >= 2 => zeta_real(j as f64).expect("j >= 2"),
        j => {
            let n = -j;
            if n % 2 == 0 {
                0.0
            } else {
                zeta_negative_odd(((n + 1) / 2) as u32)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zeta_at_even_integers() {
        assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta_real(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((zeta_real(6.0).unwrap() - PI.powi(6) / 945.0).abs() < 1e-15);
    }

    #[test]
    fn zeta_near_one_matches_laurent() {
        let e = 1e-3;
        let v = zeta_real(1.0 + e).unwrap();
        let laurent = 1.0 / e + EULER_GAMMA + 0.072_815_845_483_676_7 * e;
        assert!((v - laurent).abs() < 1e-8, "{v} vs {laurent}");
    }

    #[test]
    fn hurwitz_half_is_scaled_zeta() {
        // ζ(s, 1/2) = (2^s − 1) ζ(s)
        for s in [2.0, 3.5, 7.0] {
            let lhs = hurwitz_zeta(s, 0.5).unwrap();
            let rhs = (2f64.powf(s) - 1.0) * zeta_real(s).unwrap();
            assert!((lhs / rhs - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn hurwitz_against_brute_sum() {
        let (s, q) = (3.0, 0.3);
        let n = 20_000;
        let mut brute: f64 = (0..n).rev().map(|k| (k as f64 + q).powf(-s)).sum();
        // first Euler–Maclaurin terms for the remainder
        let a = n as f64 + q;
        brute += a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s) + s / 12.0 * a.powf(-s - 1.0);
        assert!((hurwitz_zeta(s, q).unwrap() - brute).abs() < 1e-12);
    }

    #[test]
    fn negative_integers() {
        assert!((zeta_integer(-1) + 1.0 / 12.0).abs() < 1e-16);
        assert!((zeta_integer(-3) - 1.0 / 120.0).abs() < 1e-16);
        assert!((zeta_integer(-5) + 1.0 / 252.0).abs() < 1e-16);
        assert_eq!(zeta_integer(-4), 0.0);
        assert_eq!(zeta_integer(0), -0.5);
    }

    #[test]
    fn bad_domain() {
        assert!(hurwitz_zeta(1.0, 1.0).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
    }
}
