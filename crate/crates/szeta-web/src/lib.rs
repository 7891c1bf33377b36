//! Browser bindings for the `www/` demo page.
//!
//! Each export takes plain numbers and returns a JSON string; the page does
//! the plotting. The `*_json` functions hold the logic so they can be tested
//! natively, the `#[wasm_bindgen]` wrappers only convert errors.

use serde_json::{json, Value};
use szeta::bounds::{envelope, envelope_unchecked, region_check};
use szeta::odd_extremal::OddExtremalPair;
use szeta::poisson_extremal::PoissonExtremalPair;
use szeta::Sign;
use wasm_bindgen::prelude::*;

/// Upper limit on samples per curve; keeps a typo from freezing the tab.
pub const MAX_SAMPLES: usize = 4001;

fn grid(lo: f64, hi: f64, samples: usize) -> Result<Vec<f64>, String> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!("need a finite range lo < hi, got [{lo}, {hi}]"));
    }
    if !(2..=MAX_SAMPLES).contains(&samples) {
        return Err(format!("samples must lie in 2..={MAX_SAMPLES}, got {samples}"));
    }
    let step = (hi - lo) / (samples - 1) as f64;
    Ok((0..samples).map(|i| lo + step * i as f64).collect())
}

/// `h`, `m⁺`, `m⁻` on a grid, plus the two L¹ gaps.
pub fn poisson_curves_json(beta: f64, delta: f64, lo: f64, hi: f64, samples: usize) -> Result<Value, String> {
    let p = PoissonExtremalPair::new(beta, delta).map_err(|e| e.to_string())?;
    let xs = grid(lo, hi, samples)?;
    Ok(json!({
        "x": xs,
        "target": xs.iter().map(|&x| p.h(x)).collect::<Vec<_>>(),
        "plus": xs.iter().map(|&x| p.m(Sign::Plus, x)).collect::<Vec<_>>(),
        "minus": xs.iter().map(|&x| p.m(Sign::Minus, x)).collect::<Vec<_>>(),
        "l1_plus": p.l1_gap(Sign::Plus),
        "l1_minus": p.l1_gap(Sign::Minus),
    }))
}

/// `f`, `g⁺`, `g⁻` on a grid, plus the two L¹ gaps.
pub fn odd_curves_json(m: u32, alpha: f64, delta: f64, lo: f64, hi: f64, samples: usize) -> Result<Value, String> {
    let xs = grid(lo, hi, samples)?;
    let mut p = OddExtremalPair::new(m, alpha, delta).map_err(|e| e.to_string())?;
    p.extend_nodes(lo.abs().max(hi.abs()));
    let side = |s: Sign| xs.iter().map(|&x| p.g(s, x)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string());
    Ok(json!({
        "x": xs,
        "target": xs.iter().map(|&x| p.f_odd(x)).collect::<Vec<_>>(),
        "plus": side(Sign::Plus)?,
        "minus": side(Sign::Minus)?,
        "l1_plus": p.l1_gap(Sign::Plus),
        "l1_minus": p.l1_gap(Sign::Minus),
    }))
}

/// Bound envelope for `S_{n,α}(t)` at `t = 10^log10_t`. Outside the
/// validity region the numbers are still returned, flagged.
pub fn bound_json(n: i32, alpha: f64, log10_t: f64, c: f64, slack: f64) -> Result<Value, String> {
    let t = 10f64.powf(log10_t);
    let violation = region_check(alpha, t, c).err().map(|e| e.to_string());
    let env = match violation {
        None => envelope(n, alpha, t, c),
        Some(_) => envelope_unchecked(n, alpha, t, c),
    }
    .map_err(|e| e.to_string())?;
    let (lower, upper) = env.band(slack);
    Ok(json!({
        "n": n,
        "alpha": alpha,
        "t": t,
        "lower_main": env.lower_main,
        "upper_main": env.upper_main,
        "ell": env.ell,
        "err_scale": env.err_scale,
        "lower": lower,
        "upper": upper,
        "region_violation": violation,
    }))
}

fn export(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn poisson_curves(beta: f64, delta: f64, lo: f64, hi: f64, samples: usize) -> Result<String, JsError> {
    export(poisson_curves_json(beta, delta, lo, hi, samples))
}

#[wasm_bindgen]
pub fn odd_curves(m: u32, alpha: f64, delta: f64, lo: f64, hi: f64, samples: usize) -> Result<String, JsError> {
    export(odd_curves_json(m, alpha, delta, lo, hi, samples))
}

#[wasm_bindgen]
pub fn bound(n: i32, alpha: f64, log10_t: f64, c: f64, slack: f64) -> Result<String, JsError> {
    export(bound_json(n, alpha, log10_t, c, slack))
}
