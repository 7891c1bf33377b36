//! Von Mangoldt table by a sieve of Eratosthenes.

use crate::error::{Error, Result};

/// Largest table built unless the caller raises the limit explicitly.
pub const DEFAULT_MANGOLDT_LIMIT: u64 = 100_000_000;

/// `Λ(n)` for `0 ≤ n ≤ limit` (entries 0 and 1 are zero).
#[derive(Debug, Clone)]
pub struct MangoldtTable {
    limit: u64,
    values: Vec<f64>,
}

impl MangoldtTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `Λ(n)`; zero outside `2..=limit` is not reported, out-of-range panics.
    pub fn lambda(&self, n: u64) -> f64 {
        self.values[n as usize]
    }

    /// Chebyshev `ψ(x) = Σ_{n≤x} Λ(n)`, clamped to the table.
    pub fn psi(&self, x: f64) -> f64 {
        if x < 2.0 {
            return 0.0;
        }
        let top = (x.floor() as u64).min(self.limit) as usize;
        neumaier(self.values[2..=top].iter().copied())
    }

    /// `(n, Λ(n))` for every prime power `n ≤ x`, ascending.
    pub fn prime_powers(&self, x: f64) -> impl Iterator<Item = (u64, f64)> + '_ {
        let top = if x < 2.0 { 1 } else { (x.floor() as u64).min(self.limit) };
        (2..=top).filter_map(move |n| {
            let v = self.values[n as usize];
            (v > 0.0).then_some((n, v))
        })
    }
}

/// Sieve `Λ(n)` up to `x` under the default memory cap.
pub fn sieve_mangoldt(x: u64) -> Result<MangoldtTable> {
    sieve_mangoldt_with_limit(x, DEFAULT_MANGOLDT_LIMIT)
}

pub fn sieve_mangoldt_with_limit(x: u64, limit: u64) -> Result<MangoldtTable> {
    if x < 2 {
        return Err(Error::Domain(format!("sieve limit must be at least 2, got {x}")));
    }
    if x > limit {
        return Err(Error::Resource {
            what: "von Mangoldt sieve",
            requested: x,
            limit,
        });
    }
    let n = x as usize;
    let mut values = vec![0.0; n + 1];
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        if p <= n / p {
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
        let lp = (p as f64).ln();
        let mut pk = p;
        loop {
            values[pk] = lp;
            match pk.checked_mul(p) {
                Some(next) if next <= n => pk = next,
                _ => break,
            }
        }
    }
    Ok(MangoldtTable { limit: x, values })
}

/// All primes `≤ n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        out.push(p as u64);
        if p <= n / p {
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}

/// Compensated summation; keeps long Λ-sums reproducible to the last bits.
pub fn neumaier<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for x in it {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            c += (sum - t) + x;
        } else {
            c += (x - t) + sum;
        }
        sum = t;
    }
    sum + c
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn small_values() {
        let t = sieve_mangoldt(100).unwrap();
        assert_eq!(t.lambda(8), LN_2);
        assert_eq!(t.lambda(6), 0.0);
        assert_eq!(t.lambda(97), 97f64.ln());
        assert_eq!(t.lambda(81), 3f64.ln());
        assert_eq!(t.lambda(1), 0.0);
    }

    #[test]
    fn psi_100_by_enumeration() {
        // Independent oracle: enumerate p^k ≤ 100 by trial division.
        let is_prime = |p: u64| p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        let mut oracle = 0.0;
        for p in 2..=100u64 {
            if is_prime(p) {
                let mut pk = p;
                while pk <= 100 {
                    oracle += (p as f64).ln();
                    pk *= p;
                }
            }
        }
        let t = sieve_mangoldt(100).unwrap();
        assert!((t.psi(100.0) - oracle).abs() < 1e-12);
    }

    #[test]
    fn psi_rh_window() {
        let t = sieve_mangoldt(1_000_000).unwrap();
        for x in [1e3, 1e4, 1e5, 1e6] {
            let dev = (t.psi(x) - x).abs();
            assert!(dev <= 3.0 * x.sqrt() * x.ln().powi(2), "x={x}");
        }
    }

    #[test]
    fn over_limit_is_resource_error() {
        assert!(matches!(
            sieve_mangoldt_with_limit(1000, 999),
            Err(Error::Resource { requested: 1000, limit: 999, .. })
        ));
        assert!(sieve_mangoldt(1).is_err());
    }

    #[test]
    fn prime_count() {
        assert_eq!(primes_up_to(100).len(), 25);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        let t = sieve_mangoldt(1000).unwrap();
        assert_eq!(t.prime_powers(1000.0).count(), 168 + 11 + 4 + 3 + 2 + 2 + 1 + 1 + 1);
    }
}
