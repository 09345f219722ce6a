use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &Path)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zagier-kit"));
    cmd.args(args).env_remove("ZAGIER_CACHE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or("").to_string()
}

fn json(o: &Output) -> Vec<Value> {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    match serde_json::from_slice(&o.stdout).expect("valid JSON") {
        Value::Array(rows) => rows,
        other => panic!("expected an array, got {other}"),
    }
}

#[test]
fn eval_exact_examples() {
    let o = run(&["eval", "--n", "2", "--x", "0", "--method", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1/24");
    assert_eq!(first_line(&run(&["eval", "--n", "2", "--x", "1/2"])), "23/48");
    assert_eq!(first_line(&run(&["eval", "--n", "3", "--method", "exact"])), "-1/4");
    assert_eq!(first_line(&run(&["eval", "--n", "2", "--x", "-3"])), "1/24");
}

#[test]
fn eval_formula_reports_metadata() {
    let o = run(&["--format", "json", "eval", "--n", "4", "--x", "1/3", "--method", "even-formula"]);
    let rows = json(&o);
    let r = &rows[0];
    assert_eq!(r["exact"], "-1187/6480");
    assert!(r["abs_err"].as_f64().unwrap() < 1e-8);
    assert!(r["terms_used"].as_u64().unwrap() > 0);
    assert!(r["tail_bound"].as_f64().unwrap() > 0.0);
}

#[test]
fn decimal_x_snaps_or_drops_exact() {
    let rows = json(&run(&["--format", "json", "eval", "--n", "3", "--x", "0.25", "--method", "odd-formula"]));
    assert_eq!(rows[0]["x"], "1/4");
    assert_eq!(rows[0]["snapped"], true);
    assert!(rows[0]["abs_err"].as_f64().unwrap() < 1e-8);

    let rows = json(&run(&["--format", "json", "eval", "--n", "3", "--x", "0.123456789", "--method", "odd-formula"]));
    assert_eq!(rows[0]["snapped"], false);
    assert!(rows[0]["exact"].is_null());
    assert!(rows[0]["value"].as_f64().is_some());
}

#[test]
fn bad_arguments_exit_two() {
    for args in [
        &["eval", "--n", "2", "--x", "abc"][..],
        &["eval", "--n", "3", "--x", "1/3", "--method", "even-formula"],
        &["eval", "--n", "2", "--x", "1/1000", "--method", "even-formula"],
        &["eval", "--n", "2", "--x", "1/0"],
        &["--tol", "2", "eval", "--n", "2"],
        &["--x-window", "0.5,0.1", "eval", "--n", "2"],
        &["verify", "--identity", "no-such-identity"],
        &["table", "--n", "5..1"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn non_convergence_exits_three() {
    let o = run(&["--max-terms", "10", "eval", "--n", "4", "--x", "1/3", "--method", "even-formula"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("did not reach tolerance"));
}

#[test]
fn odd_table_cycles_with_period_six() {
    let rows = json(&run(&["--format", "json", "table", "--n", "1..23", "--step", "2", "--x", "0"]));
    let got: Vec<&str> = rows.iter().map(|r| r["exact"].as_str().unwrap()).collect();
    let cycle = ["3/4", "-1/4", "-1/4", "1/4", "1/4", "-3/4"];
    assert_eq!(got.len(), 12);
    for (i, v) in got.iter().enumerate() {
        assert_eq!(*v, cycle[i % 6], "n = {}", 2 * i + 1);
    }
}

#[test]
fn csv_round_trips() {
    let o = run(&["--format", "csv", "table", "--n", "2..10", "--step", "2", "--x", "1/4,1/2", "--method", "even-formula"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rd = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["n", "x", "exact", "formula", "abs_err", "terms_used"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 10);
    for r in &rows {
        let formula: f64 = r[3].parse().unwrap();
        let err: f64 = r[4].parse().unwrap();
        let (p, q) = r[2].split_once('/').unwrap_or((&r[2], "1"));
        let exact = p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap();
        assert!((formula - exact).abs() <= err + 1e-15 && err < 1e-8, "{r:?}");
    }
}

#[test]
fn asymptotic_relative_error_decreases() {
    let rows = json(&run(&["--format", "json", "table", "--n", "18..40", "--step", "2", "--method", "asymptotic", "--compare"]));
    let rel: Vec<f64> = rows.iter().map(|r| r["rel_err"].as_f64().unwrap()).collect();
    assert_eq!(rel.len(), 12);
    assert!(rel.windows(2).all(|w| w[1] < w[0]), "{rel:?}");
    assert!(*rel.last().unwrap() < 1e-10);
}

#[test]
fn verify_suites() {
    let o = run(&["--format", "json", "verify", "--identity", "telescope"]);
    let rows = json(&o);
    let want = (2f64.sqrt() + 1.0) / 2.0;
    assert!((rows[0]["value"].as_f64().unwrap() - want).abs() < 1e-10);
    assert_eq!(rows[0]["passed"], true);

    let rows = json(&run(&["--format", "json", "verify", "--identity", "denominators", "--n-max", "60"]));
    assert!(rows.iter().all(|r| r["passed"] == true));

    let rows = json(&run(&["--format", "json", "verify", "--identity", "integral-id"]));
    assert!(rows.iter().all(|r| r["passed"] == true));
    let quadrature: Vec<&Value> = rows.iter().filter(|r| r["case"].as_str().unwrap().starts_with("n=")).collect();
    assert_eq!(quadrature.len(), 2);
    assert!(quadrature.iter().all(|r| r["error"].as_f64().unwrap() < 1e-7));
}

#[test]
fn failed_checks_exit_one() {
    // a single series term cannot reach the formula tolerance
    let o = run(&["--max-terms", "1", "verify", "--identity", "zagier-sum"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn converge_accelerates() {
    for series in ["bessel-cos", "bessel-sin", "zagier-number"] {
        let rows = json(&run(&["--format", "json", "converge", "--series", series, "--n", "1", "--x", "1/3"]));
        let target = rows[0]["target"].as_f64().unwrap();
        assert!(rows.iter().all(|r| r["target"].as_f64() == Some(target)), "{series}");
        let hit = rows
            .iter()
            .find(|r| r["accelerated_error"].as_f64().unwrap() <= 1e-8)
            .map(|r| r["terms"].as_u64().unwrap());
        assert!(hit.is_some_and(|m| m <= 500), "{series}: {hit:?}");
        let at500 = rows.iter().find(|r| r["terms"] == 500).unwrap();
        assert!(at500["naive_error"].as_f64().unwrap() > 1e-3, "{series}");
    }
}

#[test]
fn naive_zero_argument_series_converges_like_inverse_root() {
    let rows = json(&run(&["--format", "json", "converge", "--series", "zagier-number", "--terms", "100,1000,10000"]));
    let e: Vec<f64> = rows.iter().map(|r| r["naive_error"].as_f64().unwrap()).collect();
    for w in e.windows(2) {
        let ratio = w[0] / w[1];
        assert!((ratio - 10f64.sqrt()).abs() < 0.1, "{e:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let args = |threads: &'static str| {
        vec!["--threads", threads, "--format", "json", "converge", "--series", "bessel-cos", "--terms", "10,100,1000,5000"]
    };
    let a = run(&args("1")).stdout;
    let b = run(&args("4")).stdout;
    let c = run(&args("4")).stdout;
    assert_eq!(a, b);
    assert_eq!(b, c);

    let t1 = run(&["--threads", "1", "--format", "csv", "table", "--n", "1..9", "--step", "2", "--x", "1/3,2/3", "--method", "odd-formula"]);
    let t3 = run(&["--threads", "3", "--format", "csv", "table", "--n", "1..9", "--step", "2", "--x", "1/3,2/3", "--method", "odd-formula"]);
    assert_eq!(t1.stdout, t3.stdout);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("zagier.conf");
    fs::write(&cfg, "# defaults\nformat = csv\nmax-terms = 10\n").unwrap();
    let cfg_s = cfg.to_str().unwrap();

    let o = run(&["--config", cfg_s, "eval", "--n", "2", "--x", "1/2"]);
    assert!(stdout(&o).starts_with("method,n,x,"), "{}", stdout(&o));

    let o = run(&["--config", cfg_s, "eval", "--n", "4", "--x", "1/3", "--method", "even-formula"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["--config", cfg_s, "--max-terms", "20000", "--format", "json", "eval", "--n", "4", "--x", "1/3", "--method", "even-formula"]);
    assert_eq!(json(&o).len(), 1);

    fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(run(&["--config", cfg_s, "eval", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn cache_file_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.cache");
    let o = run_env(&["eval", "--n", "40"], &[("ZAGIER_CACHE", &env_path)]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&env_path).unwrap();
    assert!(text.lines().count() > 40, "{text}");
    assert!(text.contains("\n12\t-691/2730\n"));

    // the flag overrides the environment
    let flag_path = dir.path().join("flag.cache");
    let o = run_env(&["--cache", flag_path.to_str().unwrap(), "eval", "--n", "8"], &[("ZAGIER_CACHE", &env_path)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(flag_path.exists());

    fs::write(&env_path, "garbage\n").unwrap();
    let o = run_env(&["eval", "--n", "4"], &[("ZAGIER_CACHE", &env_path)]);
    assert_eq!(o.status.code(), Some(2));
}
