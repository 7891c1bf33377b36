//! Numerical substrate shared by every other module.

pub mod digamma;
pub mod mangoldt;
pub mod polylog;
pub mod quad;
pub mod series;
pub mod special;

pub use digamma::{digamma, digamma_complex, re_digamma_quarter};
pub use mangoldt::{primes_up_to, sieve_mangoldt, sieve_mangoldt_with_limit, MangoldtTable, DEFAULT_MANGOLDT_LIMIT};
pub use polylog::polylog_h;
pub use quad::{composite_kronrod, integrate, quad_adaptive, quad_breakpoints, quad_pieces, QuadOptions, QuadResult};
pub use series::{pairwise_sum, sum_tail_bounded, SeriesResult};
pub use special::{hurwitz_zeta, zeta_real, EULER_GAMMA};

/// `sin(πw)/(πw)` with a Taylor branch near the removable point.
pub fn sinc(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        let p2 = (std::f64::consts::PI * w).powi(2);
        1.0 - p2 / 6.0 + p2 * p2 / 120.0
    } else {
        let pw = std::f64::consts::PI * w;
        pw.sin() / pw
    }
}
