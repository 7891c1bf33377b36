//! `szeta.toml`: plain `key = value` lines, `#` comments.

use std::path::{Path, PathBuf};

use crate::numkit::DEFAULT_MANGOLDT_LIMIT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub zeros_path: Option<PathBuf>,
    pub mangoldt_limit: u64,
    /// Absolute slack on explicit-formula residuals.
    pub tol: f64,
    /// Multiple of the error scale allowed by band checks.
    pub slack: f64,
    pub output: Option<OutputFormat>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            zeros_path: None,
            mangoldt_limit: DEFAULT_MANGOLDT_LIMIT,
            tol: 1e-5,
            slack: crate::bounds::DEFAULT_SLACK,
            output: None,
        }
    }
}

pub const DEFAULT_CONFIG: &str = "szeta.toml";

impl Config {
    pub fn parse(text: &str, origin: &Path) -> Result<Self, String> {
        let mut cfg = Config::default();
        let base = origin.parent().unwrap_or(Path::new("."));
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = || format!("{}:{}", origin.display(), i + 1);
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("{}: expected key = value", at()))?;
            let value = value.trim().trim_matches('"');
            let bad = |what: &str| format!("{}: {what} {value:?}", at());
            match key.trim() {
                "zeros_path" => {
                    let p = PathBuf::from(value);
                    // relative paths are relative to the config file
                    cfg.zeros_path = Some(if p.is_absolute() { p } else { base.join(p) });
                }
                "mangoldt_limit" => {
                    cfg.mangoldt_limit = value.parse().map_err(|_| bad("bad integer"))?;
                    if cfg.mangoldt_limit < 2 {
                        return Err(bad("mangoldt_limit must be >= 2, got"));
                    }
                }
                "tol" => {
                    cfg.tol = value.parse().map_err(|_| bad("bad number"))?;
                    if !(cfg.tol > 0.0) {
                        return Err(bad("tol must be positive, got"));
                    }
                }
                "slack" => {
                    cfg.slack = value.parse().map_err(|_| bad("bad number"))?;
                    if !(cfg.slack >= 0.0) {
                        return Err(bad("slack must be non-negative, got"));
                    }
                }
                "output" => {
                    cfg.output = Some(match value {
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        "text" => OutputFormat::Text,
                        _ => return Err(bad("output must be json, csv or text, got")),
                    })
                }
                other => return Err(format!("{}: unknown key {other:?}", at())),
            }
        }
        Ok(cfg)
    }

    /// Read `path`, or `szeta.toml` in the working directory when present.
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let (path, required) = match path {
            Some(p) => (p.to_path_buf(), true),
            None => (PathBuf::from(DEFAULT_CONFIG), false),
        };
        match std::fs::read_to_string(&path) {
            Ok(text) => Self::parse(&text, &path),
            Err(_) if !required => Ok(Config::default()),
            Err(e) => Err(format!("cannot read config {}: {e}", path.display())),
        }
    }
}
