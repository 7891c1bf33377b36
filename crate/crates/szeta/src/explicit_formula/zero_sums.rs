//! Sums over zero ordinates with density-based tail bounds.

use std::f64::consts::PI;

use super::kernel::Envelope;
use crate::error::Result;
use crate::numkit::{integrate, pairwise_sum, QuadOptions};
use crate::zeta_core::ZeroTable;

/// Safety factor applied to density-based tails.
pub const TAIL_SAFETY: f64 = 2.0;

/// `Σ_γ [k(t−γ) + k(t+γ)]` over the table, pairwise-summed.
pub fn symmetric_zero_sum<F: Fn(f64) -> Result<f64>>(k: F, t: f64, table: &ZeroTable) -> Result<f64> {
    let mut parts = Vec::with_capacity(2 * table.len());
    for &g in table.ordinates() {
        parts.push(k(t - g)?);
        parts.push(k(t + g)?);
    }
    Ok(pairwise_sum(&parts))
}

/// `C·∫_T^∞ (log(u/2π)/2π)·[E(t−u) + E(t+u)] du` with `T` the last
/// tabulated ordinate: the part of the zero sum the table does not reach.
pub fn zero_tail_bound(env: Envelope, t: f64, table: &ZeroTable) -> Result<f64> {
    let big_t = table.last();
    let density = |u: f64| (u / (2.0 * PI)).ln().max(0.0) / (2.0 * PI);
    let f = |u: f64| density(u) * (env.at(t - u) + env.at(t + u));
    let v = integrate(f, big_t, f64::INFINITY, &QuadOptions::tol(1e-14))?.value;
    Ok(TAIL_SAFETY * v)
}
