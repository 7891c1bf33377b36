//! Zero-ordinate tables and zero counting.

use std::f64::consts::PI;
use std::path::Path;

use crate::error::{Error, Result};

static BUNDLED: &str = include_str!("../../data/zeros_100.txt");
static BUNDLED_2000: &str = include_str!("../../data/zeros_2000.txt");

/// Ascending positive ordinates `γ` of nontrivial zeros `½ + iγ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    precision: f64,
    source: String,
}

impl ZeroTable {
    /// Parse one ordinate per line; `#` starts a comment. A header comment
    /// `# precision: <x>` declares the per-entry error, otherwise it is
    /// half a unit in the last decimal of the coarsest entry.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let mut ordinates: Vec<f64> = Vec::new();
        let mut declared = None;
        let mut min_decimals = usize::MAX;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let (body, comment) = match raw.find('#') {
                Some(p) => (&raw[..p], Some(&raw[p + 1..])),
                None => (raw, None),
            };
            if let Some(c) = comment {
                if let Some(rest) = c.trim().strip_prefix("precision:") {
                    let p: f64 = rest.trim().parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad precision declaration {:?}", rest.trim()),
                    })?;
                    if !(p > 0.0) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "declared precision must be positive".into(),
                        });
                    }
                    declared = Some(p);
                }
            }
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            let v: f64 = body.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("not a number: {body:?}"),
            })?;
            if !v.is_finite() || v <= 14.0 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("ordinate {body} outside (14, inf)"),
                });
            }
            if let Some(&prev) = ordinates.last() {
                if v <= prev {
                    return Err(Error::Ordering {
                        line: line_no,
                        prev,
                        next: v,
                    });
                }
            }
            let decimals = body.split_once('.').map_or(0, |(_, d)| d.len());
            min_decimals = min_decimals.min(decimals);
            ordinates.push(v);
        }
        if ordinates.is_empty() {
            return Err(Error::EmptyTable);
        }
        let precision = declared.unwrap_or_else(|| 0.5 * 10f64.powi(-(min_decimals.min(300) as i32)));
        Ok(ZeroTable {
            ordinates,
            precision,
            source: source.into(),
        })
    }

    /// The first 100 ordinates shipped with the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED, "bundled:zeros_100").expect("bundled table is valid")
    }

    /// The first 2000 ordinates, enough for the explicit-formula checks.
    pub fn bundled_2000() -> Self {
        Self::parse(BUNDLED_2000, "bundled:zeros_2000").expect("bundled table is valid")
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }
    pub fn precision(&self) -> f64 {
        self.precision
    }
    pub fn source(&self) -> &str {
        &self.source
    }
    pub fn len(&self) -> usize {
        self.ordinates.len()
    }
    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }
    pub fn last(&self) -> f64 {
        *self.ordinates.last().expect("nonempty by construction")
    }

    /// The first `n` entries as a new table.
    pub fn truncated(&self, n: usize) -> Self {
        ZeroTable {
            ordinates: self.ordinates[..n.clamp(1, self.len())].to_vec(),
            precision: self.precision,
            source: format!("{}[..{n}]", self.source),
        }
    }

    /// Same table with every entry moved by `shift` (for stability checks).
    pub fn shifted(&self, shift: f64) -> Self {
        ZeroTable {
            ordinates: self.ordinates.iter().map(|g| g + shift).collect(),
            precision: self.precision,
            source: format!("{}{shift:+e}", self.source),
        }
    }

    /// Distance from `t` to the nearest ordinate.
    pub fn gap_to_nearest(&self, t: f64) -> f64 {
        let i = self.ordinates.partition_point(|&g| g < t);
        let mut best = f64::INFINITY;
        if i < self.len() {
            best = best.min((self.ordinates[i] - t).abs());
        }
        if i > 0 {
            best = best.min((t - self.ordinates[i - 1]).abs());
        }
        best
    }
}

/// Read and validate a zeros file.
pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    ZeroTable::parse(&text, path.display().to_string())
}

/// Smooth part of the zero-counting function,
/// `(t/2π) log(t/2π) − t/2π + 7/8`.
pub fn smooth_count(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    u * u.ln() - u + 0.875
}

/// `(N(t), N(t) − smooth_count(t))`; ordinates within the table precision
/// of `t` count one half.
pub fn count_zeros(t: f64, table: &ZeroTable) -> Result<(f64, f64)> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("count_zeros needs t > 0, got {t}")));
    }
    if t > table.last() + table.precision() {
        return Err(Error::Domain(format!(
            "t = {t} lies beyond the last tabulated ordinate {}",
            table.last()
        )));
    }
    let p = table.precision();
    let below = table.ordinates.partition_point(|&g| g < t - p);
    let upto = table.ordinates.partition_point(|&g| g <= t + p);
    let n = below as f64 + 0.5 * (upto - below) as f64;
    Ok((n, n - smooth_count(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn three_zeros() {
        let t = ZeroTable::parse("14.134725142\n21.022039639\n25.010857580\n", "inline").unwrap();
        assert_eq!(t.len(), 3);
        assert!((t.precision() - 5e-10).abs() < 1e-24);
    }

    #[test]
    fn empty_and_comment_only_are_rejected() {
        assert_eq!(ZeroTable::parse("", "x"), Err(Error::EmptyTable));
        assert_eq!(ZeroTable::parse("# nothing\n\n", "x"), Err(Error::EmptyTable));
    }

    #[test]
    fn descending_pair_reports_line_two() {
        match ZeroTable::parse("21.022039639\n14.134725142\n", "x") {
            Err(Error::Ordering { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn garbage_reports_its_line() {
        match ZeroTable::parse("14.13\n# c\nabc\n", "x") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(ZeroTable::parse("-3\n", "x"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn bundled_table() {
        let t = ZeroTable::bundled();
        assert_eq!(t.len(), 100);
        assert_eq!(t.precision(), 1e-15);
        assert!((t.ordinates()[0] - 14.134725141734694).abs() < 1e-12);
    }

    #[test]
    fn counting() {
        let t = ZeroTable::bundled();
        assert_eq!(count_zeros(20.0, &t).unwrap().0, 1.0);
        let (n, s) = count_zeros(14.0, &t).unwrap();
        assert_eq!(n, 0.0);
        assert_eq!(s, -smooth_count(14.0));
        let g = t.ordinates()[4];
        assert_eq!(count_zeros(g, &t).unwrap().0, 4.5);
        assert!(count_zeros(t.last() + 1.0, &t).is_err());
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(load_zeros("/definitely/not/here.txt"), Err(Error::Io { .. })));
    }

    proptest! {
        #[test]
        fn count_is_monotone(a in 14.0f64..236.0, b in 14.0f64..236.0) {
            let t = ZeroTable::bundled();
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(count_zeros(lo, &t).unwrap().0 <= count_zeros(hi, &t).unwrap().0);
        }
    }
}
