//! The `szeta` command line.
//!
//! Exit codes: 0 success, 1 check outside its band (or a numerical
//! failure), 2 usage or parameter error, 3 region violation, 4 zero table
//! missing or unreadable.

mod config;
mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

pub use config::{Config, OutputFormat, DEFAULT_CONFIG};
pub use format::num as format_number;

use crate::acceptance::{self, SuiteInput, CRITERIA};
use crate::bounds::{check_envelope, envelope, envelope_unchecked, region_check, BoundEnvelope};
use crate::error::Error;
use crate::explicit_formula::{appendix_asymptotic, gw_evaluate_kernel, prime_support, rep_sum, AppendixId, AppendixParams, Kernel, KernelSpec};
use crate::numkit::sieve_mangoldt_with_limit;
use crate::odd_extremal::{OddExtremalPair, DEFAULT_N_MAX};
use crate::poisson_extremal::PoissonExtremalPair;
use crate::zeta_core::{load_zeros, s_n_direct, ZeroTable};
use crate::Sign;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OUT_OF_BAND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REGION: i32 = 3;
pub const EXIT_ZEROS: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "szeta", version, about = "Extremal kernels, explicit-formula checks and S_{n,α}(t) bound envelopes")]
pub struct Cli {
    /// Config file of `key = value` lines (default: ./szeta.toml if present).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Zero-ordinate table; overrides the config file and the bundled table.
    #[arg(long, global = true)]
    zeros: Option<PathBuf>,
    /// Output format (default json; csv for sweeps).
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an extremal pair, its Fourier transform or its L¹ gaps.
    Extremal {
        #[command(subcommand)]
        family: Family,
    },
    /// Bound envelope for S_{n,α}(t), or a CSV sweep over α.
    Bound(BoundArgs),
    /// Numerical checks against independent computations.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Machine-readable results.
        #[arg(long)]
        json: bool,
        /// Comma-separated subset of criteria, e.g. `4,5,8`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Query {
    /// Evaluate at x.
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<f64>,
    /// Fourier transform at ξ.
    #[arg(long, allow_hyphen_values = true)]
    ft: Option<f64>,
    /// Both L¹ gaps.
    #[arg(long)]
    l1: bool,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Majorant/minorant of β/(β²+x²).
    Poisson {
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        delta: f64,
        #[command(flatten)]
        query: Query,
    },
    /// Majorant/minorant of f_{2m+1,α}.
    Odd {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        delta: f64,
        #[command(flatten)]
        query: Query,
    },
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: i32,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    t: f64,
    /// Region constant in (1−α)² log log t ≥ c.
    #[arg(long, default_value_t = crate::bounds::DEFAULT_REGION_C)]
    c: f64,
    /// `alpha:lo:hi:step`; rows outside the region are flagged, not fatal.
    #[arg(long)]
    sweep: Option<String>,
    /// Evaluate the envelope even outside its region (reported, exit 0).
    #[arg(long)]
    force: bool,
    /// Also compute S_{n,α}(t) directly (moderate t only).
    #[arg(long)]
    observe: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
    Both,
}

impl SignArg {
    fn signs(self) -> Vec<Sign> {
        match self {
            SignArg::Plus => vec![Sign::Plus],
            SignArg::Minus => vec![Sign::Minus],
            SignArg::Both => vec![Sign::Plus, Sign::Minus],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelArg {
    Poisson,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    /// Contour integral of log ζ.
    Direct,
    /// Representation formula over the zero table.
    Rep,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Both sides of the explicit formula for a translated extremal kernel.
    Gw {
        #[arg(long, value_enum)]
        kernel: KernelArg,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
    },
    /// Representation formula against the direct value of S_{n,α}(t).
    Rep {
        #[arg(long, allow_hyphen_values = true)]
        n: i32,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        t: f64,
        /// Allowed disagreement beyond the truncation estimates
        /// (default 0.05 for n = −1, 5 otherwise).
        #[arg(long)]
        band: Option<f64>,
    },
    /// An appendix asymptotic against its main term.
    Appendix {
        /// Item to check: A1–A5 or B1–B4.
        #[arg(long)]
        id: String,
        /// Cut-off `x` of the integral or prime sum.
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 0.75)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Shift `k` in A2/A3.
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 0.25)]
        beta: f64,
        #[arg(long, default_value_t = 0.1)]
        c: f64,
        /// Which of the two A5 sums (1 or 2).
        #[arg(long, default_value_t = 1)]
        variant: u32,
        /// Multiple of the error scale allowed (default from config, 10).
        #[arg(long)]
        slack: Option<f64>,
    },
    /// Measured S_{n,α}(t) against its bound envelope. Report only.
    Envelope {
        #[arg(long, allow_hyphen_values = true)]
        n: i32,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = crate::bounds::DEFAULT_REGION_C)]
        c: f64,
        #[arg(long)]
        slack: Option<f64>,
        #[arg(long, value_enum, default_value_t = SourceArg::Direct)]
        source: SourceArg,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => EXIT_USAGE,
            Error::Region(_) => EXIT_REGION,
            _ => EXIT_OUT_OF_BAND,
        };
        Failure { code, msg: e.to_string() }
    }
}

/// What a command produced: the document to print and the exit code.
struct Outcome {
    body: Body,
    code: i32,
}

enum Body {
    One(Value),
    Rows(Vec<Value>),
    Raw(String),
}

struct Ctx {
    cfg: Config,
    zeros_flag: Option<PathBuf>,
}

impl Ctx {
    /// Flag, then config file, then the bundled 2000-zero table.
    fn zeros(&self) -> Result<ZeroTable, Failure> {
        match self.zeros_flag.as_ref().or(self.cfg.zeros_path.as_ref()) {
            Some(p) => load_zeros(p).map_err(|e| Failure {
                code: EXIT_ZEROS,
                msg: format!("zero table unavailable: {e}"),
            }),
            None => Ok(ZeroTable::bundled_2000()),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Parse `args` (including the program name), run, and write to `out`/`err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let cfg = match Config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let format = cli.output.or(cfg.output);
    let ctx = Ctx {
        cfg,
        zeros_flag: cli.zeros,
    };
    let result = match cli.command {
        Command::Extremal { family } => cmd_extremal(family, &ctx),
        Command::Bound(args) => cmd_bound(args),
        Command::Verify { what } => cmd_verify(what, &ctx),
        Command::Selftest { json, only } => cmd_selftest(json, only, &ctx),
    };
    match result {
        Ok(o) => {
            let text = match (&o.body, format) {
                (Body::Raw(s), _) => s.clone(),
                (Body::One(v), None | Some(OutputFormat::Json)) => format::json(v),
                (Body::One(v), Some(OutputFormat::Text)) => format::text(v),
                (Body::One(v), Some(OutputFormat::Csv)) => format::csv(std::slice::from_ref(v)),
                (Body::Rows(r), None | Some(OutputFormat::Csv)) => format::csv(r),
                (Body::Rows(r), Some(OutputFormat::Json)) => format::json(&Value::Array(r.clone())),
                (Body::Rows(r), Some(OutputFormat::Text)) => r.iter().map(format::text).collect::<Vec<_>>().join("\n"),
            };
            let _ = write!(out, "{text}");
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn cmd_extremal(family: Family, ctx: &Ctx) -> Result<Outcome, Failure> {
    let body = match family {
        Family::Poisson { beta, delta, query } => {
            let p = PoissonExtremalPair::new(beta, delta)?;
            let head = json!({"family": "poisson", "beta": beta, "delta": delta});
            let tail = if let Some(x) = query.eval {
                json!({
                    "x": x,
                    "h": p.h(x),
                    "plus": p.m(Sign::Plus, x),
                    "minus": p.m(Sign::Minus, x),
                    "formula": "closed form of the extremal pair",
                })
            } else if let Some(xi) = query.ft {
                json!({
                    "xi": xi,
                    "plus": p.ft_m(Sign::Plus, xi),
                    "minus": p.ft_m(Sign::Minus, xi),
                    "formula": "closed form, supported on [-delta, delta]",
                })
            } else {
                json!({
                    "plus": p.l1_gap(Sign::Plus),
                    "minus": p.l1_gap(Sign::Minus),
                    "formula": "2 pi e^{-2 pi beta delta}/(1 -+ e^{-2 pi beta delta})",
                })
            };
            merge(head, tail)
        }
        Family::Odd { m, alpha, delta, query } => {
            let p = OddExtremalPair::with_options(m, alpha, delta, ctx.cfg.tol.min(1e-12), DEFAULT_N_MAX)?;
            let head = json!({"family": "odd", "m": m, "alpha": alpha, "delta": delta});
            let tail = if let Some(x) = query.eval {
                json!({
                    "x": x,
                    "f": p.f_odd(x),
                    "plus": p.g(Sign::Plus, x)?,
                    "minus": p.g(Sign::Minus, x)?,
                    "series_error_bound": p.g_error_bound(Complex64::new(x, 0.0))?,
                    "formula": "interpolation series at Z/delta (plus) and (Z+1/2)/delta (minus)",
                })
            } else if let Some(xi) = query.ft {
                let formula = if xi == 0.0 {
                    "integral of f plus/minus the L1 gap"
                } else if xi.abs() >= delta {
                    "zero outside (-delta, delta)"
                } else {
                    "series over k of (+-1)^k (k+1) terms"
                };
                json!({
                    "xi": xi,
                    "target": p.ft_f(xi),
                    "plus": p.ft_g(Sign::Plus, xi)?,
                    "minus": p.ft_g(Sign::Minus, xi)?,
                    "formula": formula,
                })
            } else {
                json!({
                    "plus": p.l1_gap(Sign::Plus),
                    "minus": p.l1_gap(Sign::Minus),
                    "formula": "sigma-integral of (sigma-alpha)^{2m} log((1 -+ e^{-2 pi (sigma-1/2) delta})/(1 -+ e^{-2 pi delta}))",
                })
            };
            merge(head, tail)
        }
    };
    Ok(Outcome {
        body: Body::One(body),
        code: EXIT_OK,
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(x), Value::Object(y)) = (&mut a, b) {
        x.extend(y);
    }
    a
}

fn envelope_value(env: &BoundEnvelope) -> Value {
    to_value(env)
}

/// `lo:hi:step` (optionally prefixed by `alpha:`), inclusive of `hi` up to
/// rounding.
fn parse_sweep(spec: &str) -> Result<Vec<f64>, Failure> {
    let body = spec.strip_prefix("alpha:").unwrap_or(spec);
    let parts: Vec<f64> = body
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage(format!("bad sweep {spec:?}; expected alpha:lo:hi:step")))?;
    let [lo, hi, step] = parts[..] else {
        return Err(Failure::usage(format!("bad sweep {spec:?}; expected alpha:lo:hi:step")));
    };
    if !(step > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Failure::usage("sweep needs lo <= hi and step > 0"));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    if n > 1_000_000 {
        return Err(Failure::usage("sweep has more than a million rows"));
    }
    Ok((0..=n).map(|i| lo + i as f64 * step).collect())
}

fn cmd_bound(args: BoundArgs) -> Result<Outcome, Failure> {
    if let Some(spec) = &args.sweep {
        let alphas = parse_sweep(spec)?;
        let rows = parallel_map(&alphas, |&alpha| sweep_row(args.n, alpha, args.t, args.c, args.observe));
        return Ok(Outcome {
            body: Body::Rows(rows),
            code: EXIT_OK,
        });
    }
    let alpha = args.alpha.ok_or_else(|| Failure::usage("--alpha is required unless --sweep is given"))?;
    let violation = region_check(alpha, args.t, args.c).err();
    let env = match (&violation, args.force) {
        (Some(e), false) => return Err(Failure::from(e.clone())),
        (Some(_), true) => envelope_unchecked(args.n, alpha, args.t, args.c)?,
        (None, _) => envelope(args.n, alpha, args.t, args.c)?,
    };
    let mut v = envelope_value(&env);
    let (lo, hi) = env.band(crate::bounds::DEFAULT_SLACK);
    v = merge(
        v,
        json!({
            "slack": crate::bounds::DEFAULT_SLACK,
            "lower": lo,
            "upper": hi,
            "region_violation": violation.map(|e| e.to_string()),
        }),
    );
    if args.observe {
        let s = s_n_direct(args.n, alpha, args.t)?;
        v = merge(v, json!({"observed": s.value, "observed_error": s.est_error, "inside": s.value >= lo && s.value <= hi}));
    }
    Ok(Outcome {
        body: Body::One(v),
        code: EXIT_OK,
    })
}

fn sweep_row(n: i32, alpha: f64, t: f64, c: f64, observe: bool) -> Value {
    let env = match envelope_unchecked(n, alpha, t, c) {
        Ok(e) => e,
        Err(e) => {
            return json!({
                "n": n, "alpha": alpha, "t": t, "lower_main": null, "upper_main": null,
                "ell": null, "err_scale": null, "observed": null, "flag": format!("error: {e}"),
            })
        }
    };
    let mut flag = match region_check(alpha, t, c) {
        Ok(()) => "ok".to_string(),
        Err(e) => format!("region: {e}"),
    };
    let observed = if observe {
        match s_n_direct(n, alpha, t) {
            Ok(s) => {
                let (lo, hi) = env.band(crate::bounds::DEFAULT_SLACK);
                if !(s.value >= lo && s.value <= hi) {
                    flag.push_str("; outside band");
                }
                Some(s.value)
            }
            Err(e) => {
                flag.push_str(&format!("; observe failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    json!({
        "n": n,
        "alpha": alpha,
        "t": t,
        "lower_main": env.lower_main,
        "upper_main": env.upper_main,
        "ell": env.ell,
        "err_scale": env.err_scale,
        "observed": observed,
        "flag": flag,
    })
}

/// Map over `items` on all available cores; results keep input order.
fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    let chunk = items.len().div_ceil(workers).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    })
}

fn cmd_verify(what: Verify, ctx: &Ctx) -> Result<Outcome, Failure> {
    match what {
        Verify::Gw {
            kernel,
            beta,
            m,
            alpha,
            delta,
            t,
            sign,
        } => {
            let spec = match kernel {
                KernelArg::Poisson => KernelSpec::Poisson {
                    beta: beta.ok_or_else(|| Failure::usage("--beta is required for the poisson kernel"))?,
                },
                KernelArg::Odd => KernelSpec::Odd {
                    m: m.ok_or_else(|| Failure::usage("--m is required for the odd kernel"))?,
                    alpha: alpha.ok_or_else(|| Failure::usage("--alpha is required for the odd kernel"))?,
                },
            };
            let mut k = Kernel::build_with_tol(spec, delta, ctx.cfg.tol.min(1e-12))?;
            let zeros = ctx.zeros()?;
            let limit = prime_support(delta).ceil() as u64;
            let table = sieve_mangoldt_with_limit(limit, ctx.cfg.mangoldt_limit)?;
            k.prepare_range(t + zeros.last() + 1.0);
            let mut reports = Vec::new();
            let mut all_within = true;
            for s in sign.signs() {
                let r = gw_evaluate_kernel(&k, s, t, &zeros, &table)?;
                let within = r.within(ctx.cfg.tol);
                all_within &= within;
                reports.push(merge(to_value(&r), json!({"slack": ctx.cfg.tol, "within": within})));
            }
            let body = json!({
                "zeros": zeros.source(),
                "zero_count": zeros.len(),
                "sieve_limit": limit,
                "reports": reports,
            });
            Ok(Outcome {
                body: Body::One(body),
                code: if all_within { EXIT_OK } else { EXIT_OUT_OF_BAND },
            })
        }
        Verify::Rep { n, alpha, t, band } => {
            let zeros = ctx.zeros()?;
            let rep = rep_sum(n, alpha, t, &zeros)?;
            let direct = s_n_direct(n, alpha, t)?;
            let band = band.unwrap_or(if n == -1 { 0.05 } else { 5.0 });
            let allowed = band + rep.est_error + direct.est_error;
            let diff = rep.value - direct.value;
            let body = json!({
                "n": n,
                "alpha": alpha,
                "t": t,
                "zeros": zeros.source(),
                "representation": to_value(&rep),
                "direct": to_value(&direct),
                "difference": diff,
                "band": band,
                "allowed": allowed,
                "within": diff.abs() <= allowed,
            });
            Ok(Outcome {
                body: Body::One(body),
                code: if diff.abs() <= allowed { EXIT_OK } else { EXIT_OUT_OF_BAND },
            })
        }
        Verify::Appendix {
            id,
            x,
            alpha,
            m,
            k,
            beta,
            c,
            variant,
            slack,
        } => {
            let id = AppendixId::parse(&id).ok_or_else(|| {
                Failure::usage(format!("unknown appendix item {id:?}; expected one of A1..A5, B1..B4"))
            })?;
            let p = AppendixParams {
                x,
                alpha,
                m,
                k,
                beta,
                c,
                variant,
            };
            let table = if id.needs_sieve() {
                if !(x >= 2.0 && x.is_finite()) {
                    return Err(Failure::usage(format!("x must be at least 2, got {x}")));
                }
                Some(sieve_mangoldt_with_limit(x.floor() as u64, ctx.cfg.mangoldt_limit)?)
            } else {
                None
            };
            let check = appendix_asymptotic(id, &p, table.as_ref())?;
            let slack = slack.unwrap_or(ctx.cfg.slack);
            let holds = check.holds(slack);
            let body = merge(
                to_value(&check),
                json!({
                    "deviation": check.deviation(),
                    "relative_gap": check.relative_gap(),
                    "slack": slack,
                    "holds": holds,
                }),
            );
            Ok(Outcome {
                body: Body::One(body),
                code: if holds { EXIT_OK } else { EXIT_OUT_OF_BAND },
            })
        }
        Verify::Envelope {
            n,
            alpha,
            t,
            c,
            slack,
            source,
        } => {
            let observed = match source {
                SourceArg::Direct => s_n_direct(n, alpha, t)?,
                SourceArg::Rep => rep_sum(n, alpha, t, &ctx.zeros()?)?,
            };
            let slack = slack.unwrap_or(ctx.cfg.slack);
            let report = check_envelope(&observed, c, slack)?;
            // report only: the implied constants are unknown
            Ok(Outcome {
                body: Body::One(to_value(&report)),
                code: EXIT_OK,
            })
        }
    }
}

fn cmd_selftest(as_json: bool, only: Vec<u8>, ctx: &Ctx) -> Result<Outcome, Failure> {
    let ids: Vec<u8> = if only.is_empty() { CRITERIA.to_vec() } else { only };
    if let Some(bad) = ids.iter().find(|i| !CRITERIA.contains(i)) {
        return Err(Failure::usage(format!("no criterion {bad}; criteria are 1..9")));
    }
    let input = SuiteInput {
        zeros: ctx.zeros().map_err(|f| f.msg),
    };
    let results = acceptance::run(&ids, &input);
    let all = results.iter().all(|r| r.pass);
    let body = if as_json {
        Body::Raw(format::json(&json!({
            "pass": all,
            "criteria": to_value(&results),
        })))
    } else {
        let mut s: String = results.iter().map(|r| r.summary_line() + "\n").collect();
        let passed = results.iter().filter(|r| r.pass).count();
        s.push_str(&format!("{passed}/{} criteria pass\n", results.len()));
        Body::Raw(s)
    };
    Ok(Outcome {
        body,
        code: if all { EXIT_OK } else { EXIT_OUT_OF_BAND },
    })
}
