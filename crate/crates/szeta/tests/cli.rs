use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn szeta(args: &[&str]) -> Output {
    szeta_in(&std::env::temp_dir(), args)
}

fn szeta_in(dir: &std::path::Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szeta"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("szeta-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn poisson_gaps_match_closed_form() {
    let o = szeta(&["extremal", "poisson", "--beta", "0.25", "--delta", "1", "--l1"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    let e = (-std::f64::consts::PI / 2.0).exp();
    let want = 2.0 * std::f64::consts::PI * e / (1.0 - e);
    assert!((v["plus"].as_f64().unwrap() - want).abs() < 1e-13);
    assert!(v["minus"].as_f64().unwrap() < want);
    assert!(v["formula"].is_string());
}

#[test]
fn odd_ft_at_zero() {
    let o = szeta(&["extremal", "odd", "--m", "0", "--alpha", "0.5", "--delta", "1", "--ft", "0"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    let target = v["target"].as_f64().unwrap();
    assert!((target - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert!(v["plus"].as_f64().unwrap() > target && v["minus"].as_f64().unwrap() < target);
}

#[test]
fn missing_required_flag_is_usage_error() {
    let o = szeta(&["extremal", "poisson", "--delta", "1", "--l1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--beta"));
}

#[test]
fn bound_inside_region_gives_json_band() {
    let o = szeta(&["bound", "--n", "1", "--alpha", "0.75", "--t", "1e60", "--c", "0.1"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert!(v["lower"].as_f64().unwrap() < 0.0 && v["upper"].as_f64().unwrap() > 0.0);
    assert!(v["region_violation"].is_null());
}

#[test]
fn bound_outside_region_exits_three() {
    let o = szeta(&["bound", "--n", "1", "--alpha", "0.75", "--t", "1e6", "--c", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("log log t >= 4"));
    let o = szeta(&["bound", "--n", "1", "--alpha", "0.99", "--t", "1e60", "--c", "0.1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1-alpha)^2 log log t >= c"));
    // --force reports instead
    let o = szeta(&["bound", "--n", "1", "--alpha", "0.75", "--t", "1e6", "--c", "1", "--force"]);
    assert_eq!(code(&o), 0);
    assert!(json_of(&o)["region_violation"].is_string());
}

#[test]
fn sweep_is_csv_with_monotone_alpha() {
    let o = szeta(&["bound", "--n", "2", "--t", "1e80", "--c", "0.05", "--sweep", "alpha:0.55:0.95:0.05"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,alpha,t,lower_main,upper_main,ell,err_scale,observed,flag");
    let alphas: Vec<f64> = lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(alphas.len(), 9);
    assert!(alphas.windows(2).all(|w| w[0] < w[1]));
    assert!(text.contains("region:"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "gw", "--kernel", "poisson", "--beta", "0.25", "--delta", "1.5", "--t", "50"];
    let a = szeta(&args);
    let b = szeta(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    // 15 significant digits in scientific notation
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("\"t\": 5.00000000000000e1"));
}

#[test]
fn gw_reports_are_within_their_tails() {
    let o = szeta(&["verify", "gw", "--kernel", "odd", "--m", "0", "--alpha", "0.75", "--delta", "1", "--t", "60"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v = json_of(&o);
    for r in v["reports"].as_array().unwrap() {
        assert_eq!(r["within"], true);
    }
}

#[test]
fn missing_zeros_file_exits_four() {
    let o = szeta(&["verify", "gw", "--kernel", "poisson", "--beta", "0.25", "--delta", "1.5", "--t", "50", "--zeros", "/nonexistent/zeros.txt"]);
    assert_eq!(code(&o), 4);
    let o = szeta(&["verify", "rep", "--n", "-1", "--alpha", "0.75", "--t", "100", "--zeros", "/nonexistent/zeros.txt"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn config_file_supplies_zeros_and_flag_overrides_it() {
    let dir = scratch("config");
    std::fs::write(dir.join("szeta.toml"), "zeros_path = missing.txt\noutput = text\n").unwrap();
    let args = ["verify", "rep", "--n", "-1", "--alpha", "0.75", "--t", "100"];
    assert_eq!(code(&szeta_in(&dir, &args)), 4);
    let bundled = concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_2000.txt");
    let mut with_flag = args.to_vec();
    with_flag.extend(["--zeros", bundled]);
    let o = szeta_in(&dir, &with_flag);
    assert_eq!(code(&o), 0);
    // output = text from the config file
    assert!(String::from_utf8_lossy(&o.stdout).contains("within: true"));
}

#[test]
fn bad_config_is_usage_error() {
    let dir = scratch("badconfig");
    std::fs::write(dir.join("szeta.toml"), "tol = -1\n").unwrap();
    let o = szeta_in(&dir, &["extremal", "poisson", "--beta", "0.25", "--delta", "1", "--l1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn appendix_report_and_exit_code() {
    let o = szeta(&["verify", "appendix", "--id", "B3", "--x", "1e5", "--alpha", "0.75", "--m", "0"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!(v["id"], "B3");
    assert_eq!(v["holds"], true);
    // B1 at 1e6 is outside the 10x band (pre-asymptotic), so exit 1
    let o = szeta(&["verify", "appendix", "--id", "B1", "--x", "1e6", "--alpha", "0.75", "--m", "0"]);
    assert_eq!(code(&o), 1);
    assert!(json_of(&o)["deviation"].as_f64().unwrap() > 10.0);
    let o = szeta(&["verify", "appendix", "--id", "Z9", "--x", "1e6"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn envelope_is_report_only() {
    let o = szeta(&["verify", "envelope", "--n", "-1", "--alpha", "0.75", "--t", "14.134725141734693", "--slack", "0"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert!(v["region_violation"].is_string());
}

#[test]
fn selftest_subset_and_json() {
    let o = szeta(&["selftest", "--only", "4,5,8", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 3);
}

#[test]
fn selftest_with_corrupted_zeros_names_gw_checks() {
    let dir = scratch("corrupt");
    let path = dir.join("zeros.txt");
    // valid syntax and nine decimals (so the precision term stays small), wrong ordinates
    let text: String = (0..2000).map(|i| format!("{:.9}\n", 15.0 + 0.9 * i as f64)).collect();
    std::fs::write(&path, text).unwrap();
    let o = szeta(&["selftest", "--only", "3", "--zeros", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("[FAIL] criterion 3") && out.contains("GW"), "{out}");
}
