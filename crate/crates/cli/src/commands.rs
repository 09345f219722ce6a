use std::io::Write;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use zagier_core::exact::zagier_eval;
use zagier_core::formulas::{
    convergence_study, even_asymptotic, odd_asymptotic, zagier_even_formula, zagier_number_formula, zagier_odd_formula,
    zagier_type_sum, zero_index_asymptotic, ConvergenceSeries, EvalReport, Point,
};
use zagier_core::verify::{run_suite, Identity, VerifyOptions};
use zagier_core::{BigRational, Error};

use crate::args::{Format, Method};
use crate::config::RunConfig;
use crate::output::{Cell, Table};

/// Why a command did not finish with exit status 0.
#[derive(Debug)]
pub enum Failure {
    /// At least one identity check failed.
    Check,
    Usage(String),
    NonConvergence(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Check => 1,
            Failure::Usage(_) => 2,
            Failure::NonConvergence(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } | Error::Quadrature { .. } => Failure::NonConvergence(e.to_string()),
            Error::Domain(_) | Error::OutsideWindow { .. } | Error::Cache(_) => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("cannot write output: {e}"))
    }
}

pub type Outcome = Result<(), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Parses `x` and snaps decimals that sit on a small-denominator rational.
pub fn parse_point(s: &str) -> Result<(Point, bool), Failure> {
    let p: Point = s.parse()?;
    Ok(p.snap())
}

/// One evaluation of a method at `(n, x)`, `n` being the polynomial index.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub n: usize,
    pub x: Option<Point>,
    pub snapped: bool,
    pub exact: Option<BigRational>,
    pub value: f64,
    pub terms_used: Option<usize>,
    pub tail_bound: Option<f64>,
}

impl Evaluation {
    fn abs_error(&self) -> Option<f64> {
        let e = self.exact.as_ref()?.to_f64()?;
        Some((self.value - e).abs())
    }

    fn rel_error(&self) -> Option<f64> {
        let e = self.exact.as_ref()?.to_f64()?;
        let a = (self.value - e).abs();
        Some(if e != 0.0 { a / e.abs() } else { a })
    }

    fn exact_text(&self) -> Option<String> {
        self.exact.as_ref().map(|q| q.to_string())
    }
}

fn exact_at(n: usize, x: Option<&Point>, snapped: bool) -> Result<Option<BigRational>, Failure> {
    match x {
        None => Ok(Some(zagier_eval(n, &BigRational::from_integer(0.into())))),
        Some(p) if p.is_rational() || snapped => Ok(Some(zagier_eval(n, &p.rational()?))),
        Some(_) => Ok(None),
    }
}

fn from_report(n: usize, x: Option<Point>, snapped: bool, r: EvalReport) -> Evaluation {
    // a decimal x that did not snap is compared at its exact binary value,
    // which is not the number the user typed; drop the exact column then
    let keep_exact = x.as_ref().is_none_or(|p| p.is_rational());
    Evaluation {
        n,
        x,
        snapped,
        exact: if keep_exact { r.exact.clone() } else { None },
        value: r.formula_value,
        terms_used: Some(r.terms_used()),
        tail_bound: Some(r.tail_bound()),
    }
}

fn need_even(n: usize, method: &str) -> Result<usize, Failure> {
    if n == 0 || n % 2 == 1 {
        return usage(format!("{method} needs an even polynomial index n >= 2, got {n}"));
    }
    Ok(n / 2)
}

pub fn evaluate(method: Method, n: usize, x: Option<&str>, cfg: &RunConfig) -> Result<Evaluation, Failure> {
    if n == 0 {
        return usage("the polynomial index n must be at least 1");
    }
    let (point, snapped) = match x {
        Some(s) => {
            let (p, s) = parse_point(s)?;
            (Some(p), s)
        }
        None => (None, false),
    };
    let series = cfg.series();
    let require_x = |name: &str| -> Result<Point, Failure> {
        point.clone().ok_or_else(|| Failure::Usage(format!("{name} needs --x")))
    };
    let forbid_x = |name: &str| -> Outcome {
        if point.is_some() {
            return usage(format!("{name} takes no --x"));
        }
        Ok(())
    };
    match method {
        Method::Exact => {
            let exact = match &point {
                Some(p) if !p.is_rational() => {
                    // unsnapped decimal: exact value at its binary expansion, reported as a double
                    let v = zagier_eval(n, &p.rational()?).to_f64().unwrap_or(f64::NAN);
                    return Ok(Evaluation { n, x: point, snapped, exact: None, value: v, terms_used: None, tail_bound: None });
                }
                _ => exact_at(n, point.as_ref(), snapped)?.expect("rational point"),
            };
            let value = exact.to_f64().unwrap_or(f64::NAN);
            Ok(Evaluation { n, x: point, snapped, exact: Some(exact), value, terms_used: None, tail_bound: None })
        }
        Method::EvenFormula => {
            let k = need_even(n, "even-formula")?;
            let p = require_x("even-formula")?;
            Ok(from_report(n, Some(p.clone()), snapped, zagier_even_formula(k, &p, &series)?))
        }
        Method::OddFormula => {
            if n % 2 == 0 {
                return usage(format!("odd-formula needs an odd polynomial index, got {n}"));
            }
            let p = require_x("odd-formula")?;
            Ok(from_report(n, Some(p.clone()), snapped, zagier_odd_formula((n - 1) / 2, &p, &series)?))
        }
        Method::ZagierNumber => {
            let k = need_even(n, "zagier-number")?;
            forbid_x("zagier-number")?;
            Ok(from_report(n, None, false, zagier_number_formula(k, &series)?))
        }
        Method::ZagierType => {
            let k = need_even(n, "zagier-type")?;
            forbid_x("zagier-type")?;
            let mut e = from_report(n, None, false, zagier_type_sum(k, &series)?);
            e.x = Some(Point::from((-3, 2)));
            Ok(e)
        }
        Method::Asymptotic => {
            let value = match &point {
                None if n % 2 == 0 => zero_index_asymptotic(n / 2),
                None => return usage("the asymptotic form of B*_n at x = 0 needs even n"),
                Some(p) => {
                    let xv = p.value();
                    if !(xv > 0.0 && xv < 1.0) {
                        return usage(format!("asymptotic needs 0 < x < 1, got {p}"));
                    }
                    if n % 2 == 0 {
                        even_asymptotic(n / 2, xv)
                    } else {
                        odd_asymptotic((n - 1) / 2, xv)
                    }
                }
            };
            let exact = exact_at(n, point.as_ref(), snapped)?;
            Ok(Evaluation { n, x: point, snapped, exact, value, terms_used: None, tail_bound: None })
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Exact => "exact",
        Method::EvenFormula => "even-formula",
        Method::OddFormula => "odd-formula",
        Method::ZagierNumber => "zagier-number",
        Method::ZagierType => "zagier-type",
        Method::Asymptotic => "asymptotic",
    }
}

pub fn cmd_eval(method: Method, n: usize, x: Option<&str>, cfg: &RunConfig, out: &mut impl Write) -> Outcome {
    let e = evaluate(method, n, x, cfg)?;
    if cfg.format == Format::Text {
        match (method, e.exact_text()) {
            (Method::Exact, Some(q)) => writeln!(out, "{q}")?,
            _ => writeln!(out, "{}", e.value)?,
        }
        let mut meta: Vec<(&str, String)> = vec![("method", method_name(method).into()), ("n", n.to_string())];
        if let Some(p) = &e.x {
            meta.push(("x", p.to_string()));
        }
        if e.snapped {
            meta.push(("snapped", "true".into()));
        }
        if method != Method::Exact {
            if let Some(q) = e.exact_text() {
                meta.push(("exact", q));
            }
            if let Some(a) = e.abs_error() {
                meta.push(("abs_err", format!("{a:e}")));
                meta.push(("rel_err", format!("{:e}", e.rel_error().unwrap_or(f64::NAN))));
            }
        }
        if let Some(t) = e.terms_used {
            meta.push(("terms_used", t.to_string()));
        }
        if let Some(b) = e.tail_bound {
            meta.push(("tail_bound", format!("{b:e}")));
        }
        for (k, v) in meta {
            writeln!(out, "{k}: {v}")?;
        }
        return Ok(());
    }
    let mut t = Table::new(&[
        "method", "n", "x", "snapped", "value", "exact", "abs_err", "rel_err", "terms_used", "tail_bound",
    ]);
    t.push(vec![
        method_name(method).into(),
        n.into(),
        e.x.as_ref().map(|p| p.to_string()).into(),
        e.snapped.into(),
        e.value.into(),
        e.exact_text().into(),
        e.abs_error().into(),
        e.rel_error().into(),
        e.terms_used.into(),
        e.tail_bound.into(),
    ]);
    t.write(cfg.format, out)?;
    Ok(())
}

pub fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("n range must look like `a..b`, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn cmd_table(
    method: Method,
    range: &str,
    step: usize,
    xs: Option<&str>,
    compare: bool,
    cfg: &RunConfig,
    out: &mut impl Write,
) -> Outcome {
    let (a, b) = parse_range(range)?;
    if step == 0 {
        return usage("step must be positive");
    }
    let points: Vec<Option<String>> = match xs {
        None => vec![None],
        Some(list) => list.split(',').map(|s| Some(s.trim().to_string())).collect(),
    };
    let jobs: Vec<(usize, Option<String>)> =
        (a..=b).step_by(step).flat_map(|n| points.iter().map(move |x| (n, x.clone()))).collect();
    let results: Vec<Result<Evaluation, Failure>> =
        jobs.par_iter().map(|(n, x)| evaluate(method, *n, x.as_deref(), cfg)).collect();
    let mut cols = vec!["n", "x", "exact", "formula", "abs_err", "terms_used"];
    if compare {
        cols.push("rel_err");
    }
    let mut t = Table::new(&cols);
    for r in results {
        let e = r?;
        let mut row: Vec<Cell> = vec![
            e.n.into(),
            e.x.as_ref().map(|p| p.to_string()).into(),
            e.exact_text().into(),
            e.value.into(),
            e.abs_error().into(),
            e.terms_used.into(),
        ];
        if compare {
            row.push(e.rel_error().into());
        }
        t.push(row);
    }
    t.write(cfg.format, out)?;
    Ok(())
}

pub fn cmd_verify(ids: &[Identity], n_max: usize, cfg: &RunConfig, out: &mut impl Write, log: &mut impl Write) -> Outcome {
    let opts = VerifyOptions { series: cfg.series(), n_max, ..VerifyOptions::default() };
    let mut t = Table::new(&["identity", "case", "value", "reference", "error", "tolerance", "passed", "detail"]);
    let mut all_passed = true;
    for &id in ids {
        let r = run_suite(id, &opts);
        let failed = r.failures().count();
        all_passed &= r.passed() && !r.cases.is_empty();
        writeln!(log, "{id}: {} of {} cases passed", r.cases.len() - failed, r.cases.len())?;
        for c in &r.cases {
            t.push(vec![
                id.name().into(),
                c.case.clone().into(),
                c.value.into(),
                c.reference.into(),
                c.error.into(),
                c.tolerance.into(),
                c.passed.into(),
                c.detail.clone().into(),
            ]);
        }
    }
    t.write(cfg.format, out)?;
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

pub fn cmd_converge(
    series: ConvergenceSeries,
    n: usize,
    x: &str,
    terms: &str,
    cfg: &RunConfig,
    out: &mut impl Write,
) -> Outcome {
    let (point, _) = parse_point(x)?;
    let counts: Vec<usize> = terms
        .split(',')
        .map(|s| s.trim().parse::<usize>().ok().filter(|&m| m > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| Failure::Usage(format!("terms must be positive integers, got {terms:?}")))?;
    let rows = convergence_study(series, n, &point, &counts, &cfg.series())?;
    let mut t = Table::new(&[
        "terms", "naive", "naive_error", "accelerated", "accelerated_error", "tail_bound", "target",
    ]);
    for r in rows {
        t.push(vec![
            r.terms.into(),
            r.naive.into(),
            r.naive_error.into(),
            r.accelerated.into(),
            r.accelerated_error.into(),
            r.tail_bound.into(),
            r.target.into(),
        ]);
    }
    t.write(cfg.format, out)?;
    Ok(())
}
