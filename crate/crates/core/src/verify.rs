//! Named identity suites: each runs a fixed grid of cases and records, per
//! case, the computed value, its reference and whether the difference is
//! within tolerance. Evaluation errors count as failed cases.

use std::f64::consts::{PI, SQRT_2, TAU};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{
    modified_bernoulli, ratio, two_adic_valuation, two_adic_valuation_prediction,
    zagier_eval, zagier_shift,
};
use crate::formulas::{
    fourier_coeff_dj_check, fourier_coeff_p_check, poisson_j_series_check, zagier_even_formula,
    zagier_number_formula, zagier_odd_formula, zagier_type_sum, EvalReport, Point, PoissonConfig,
};
use crate::series::{series_007_rhs, sin_power_sum, telescope_sum, SeriesConfig};
use crate::specfun::{
    bessel_j, bessel_y_int, coates_integral, coates_ode_residual, coates_series, p_func, q_func, schlafli_s,
    EULER_GAMMA,
};

/// The identities that can be checked by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Thm12,
    Thm13,
    ZagierSum,
    Thm15,
    Lemma33,
    Lemma34,
    IntegralId,
    FormS1,
    PoissonSeries,
    Series007,
    Telescope,
    Denominators,
    Shift,
    Reflection,
}

impl Identity {
    pub const ALL: [Identity; 14] = [
        Identity::Thm12,
        Identity::Thm13,
        Identity::ZagierSum,
        Identity::Thm15,
        Identity::Lemma33,
        Identity::Lemma34,
        Identity::IntegralId,
        Identity::FormS1,
        Identity::PoissonSeries,
        Identity::Series007,
        Identity::Telescope,
        Identity::Denominators,
        Identity::Shift,
        Identity::Reflection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Thm12 => "thm12",
            Identity::Thm13 => "thm13",
            Identity::ZagierSum => "zagier-sum",
            Identity::Thm15 => "thm15",
            Identity::Lemma33 => "lemma33",
            Identity::Lemma34 => "lemma34",
            Identity::IntegralId => "integral-id",
            Identity::FormS1 => "form-s1",
            Identity::PoissonSeries => "poisson-series",
            Identity::Series007 => "series-007",
            Identity::Telescope => "telescope",
            Identity::Denominators => "denominators",
            Identity::Shift => "shift",
            Identity::Reflection => "reflection",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown identity {s:?}")))
    }
}

/// One checked case of a suite.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckCase {
    pub case: String,
    pub value: f64,
    pub reference: f64,
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Error message when the case could not be evaluated.
    pub detail: Option<String>,
}

impl CheckCase {
    fn numeric(case: String, value: f64, reference: f64, tolerance: f64) -> Self {
        let error = (value - reference).abs();
        Self { case, value, reference, error, tolerance, passed: error < tolerance, detail: None }
    }

    fn exact(case: String, value: &BigRational, reference: &BigRational) -> Self {
        let error = (value - reference).abs().to_f64().unwrap_or(f64::INFINITY);
        Self {
            case,
            value: value.to_f64().unwrap_or(f64::NAN),
            reference: reference.to_f64().unwrap_or(f64::NAN),
            error,
            tolerance: 0.0,
            passed: value == reference,
            detail: None,
        }
    }

    fn from_report(case: String, report: Result<EvalReport>, tolerance: f64) -> Self {
        match report {
            Ok(r) => Self::numeric(case, r.formula_value, r.reference, tolerance),
            Err(e) => Self::failed(case, e, tolerance),
        }
    }

    fn failed(case: String, e: Error, tolerance: f64) -> Self {
        Self {
            case,
            value: f64::NAN,
            reference: f64::NAN,
            error: f64::NAN,
            tolerance,
            passed: false,
            detail: Some(e.to_string()),
        }
    }
}

/// All cases of one identity suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub identity: Identity,
    pub cases: Vec<CheckCase>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckCase> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

/// Settings shared by the suites.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub series: SeriesConfig,
    /// Largest index for the denominator suite.
    pub n_max: usize,
    pub poisson: PoissonConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { series: SeriesConfig::default(), n_max: 60, poisson: PoissonConfig::default() }
    }
}

/// The rational grid shared by the main formula suites.
pub const X_GRID: [(i64, i64); 6] = [(1, 10), (1, 4), (1, 3), (1, 2), (2, 3), (9, 10)];

const FORMULA_TOL: f64 = 1e-7;

fn grid_suite<F>(ns: std::ops::RangeInclusive<usize>, f: F) -> Vec<CheckCase>
where
    F: Fn(usize, &Point) -> Result<EvalReport> + Sync,
{
    let cases: Vec<(usize, (i64, i64))> = ns.flat_map(|n| X_GRID.iter().map(move |&x| (n, x))).collect();
    cases
        .par_iter()
        .map(|&(n, (p, q))| {
            let x = Point::from((p, q));
            CheckCase::from_report(format!("n={n} x={p}/{q}"), f(n, &x), FORMULA_TOL)
        })
        .collect()
}

/// Runs one suite.
pub fn run_suite(identity: Identity, opts: &VerifyOptions) -> SuiteReport {
    let cfg = &opts.series;
    let cases = match identity {
        Identity::Thm12 => grid_suite(1..=5, |n, x| zagier_even_formula(n, x, cfg)),
        Identity::Thm13 => grid_suite(0..=5, |n, x| zagier_odd_formula(n, x, cfg)),
        Identity::ZagierSum => (1..=8)
            .into_par_iter()
            .map(|n| CheckCase::from_report(format!("n={n}"), zagier_number_formula(n, cfg), FORMULA_TOL))
            .collect(),
        Identity::Thm15 => (1..=5)
            .into_par_iter()
            .map(|n| CheckCase::from_report(format!("n={n}"), zagier_type_sum(n, cfg), FORMULA_TOL))
            .collect(),
        Identity::Lemma33 => fourier_suite(fourier_coeff_p_check, 1e-8, 1e-10),
        Identity::Lemma34 => fourier_suite(fourier_coeff_dj_check, 1e-7, 1e-9),
        Identity::IntegralId => integral_suite(),
        Identity::FormS1 => form_s1_suite(),
        Identity::PoissonSeries => poisson_suite(&opts.poisson),
        Identity::Series007 => series_007_suite(),
        Identity::Telescope => {
            let want = (SQRT_2 + 1.0) / 2.0;
            vec![match telescope_sum(1e-12) {
                Ok(r) => CheckCase::numeric("telescoping sum".into(), r.value, want, 1e-10),
                Err(e) => CheckCase::failed("telescoping sum".into(), e, 1e-10),
            }]
        }
        Identity::Denominators => denominator_suite(opts.n_max),
        Identity::Shift => shift_suite(),
        Identity::Reflection => reflection_suite(),
    };
    SuiteReport { identity, cases }
}

fn fourier_suite(check: fn(usize, usize) -> Result<EvalReport>, tol: f64, zero_tol: f64) -> Vec<CheckCase> {
    let cases = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 0), (2, 0)];
    cases
        .par_iter()
        .map(|&(n, m)| {
            let tol = if m == 0 { zero_tol } else { tol };
            CheckCase::from_report(format!("n={n} m={m}"), check(n, m), tol)
        })
        .collect()
}

fn integral_suite() -> Vec<CheckCase> {
    let mut out: Vec<CheckCase> = [(1usize, 2.0 * TAU), (2, 4.0 * TAU)]
        .par_iter()
        .map(|&(n, u)| {
            let case = format!("n={n} u={u:.6}");
            match (coates_integral(n, u), coates_series(n, u)) {
                (Ok(q), Ok(s)) => CheckCase::numeric(case, q.value, s.value, 1e-7),
                (Err(e), _) | (_, Err(e)) => CheckCase::failed(case, e, 1e-7),
            }
        })
        .collect();
    let case = "ode residual n=1 u=4pi".to_string();
    out.push(match coates_ode_residual(1, 2.0 * TAU, 1e-2) {
        Ok(r) => CheckCase::numeric(case, r, 0.0, 1e-5),
        Err(e) => CheckCase::failed(case, e, 1e-5),
    });
    out
}

/// `S_n(z) = -pi Y_n(z) + 2(gamma + log(z/2)) J_n(z) + P_n(z) - 2 Q_n(z)`.
fn form_s1_suite() -> Vec<CheckCase> {
    let mut cases = Vec::new();
    for n in [2usize, 4, 6] {
        for z in [2.0 * TAU, 4.0 * TAU, 6.0 * TAU, 3.0] {
            cases.push((n, z));
        }
    }
    cases
        .par_iter()
        .map(|&(n, z)| {
            let case = format!("n={n} z={z:.6}");
            let rhs = (|| -> Result<f64> {
                let y = bessel_y_int(n, z)?.value;
                let j = bessel_j(n as f64, z)?.value;
                let p = p_func(n, z)?.value;
                let q = q_func(n, z)?.value;
                Ok(-PI * y + 2.0 * (EULER_GAMMA + (z / 2.0).ln()) * j + p - 2.0 * q)
            })();
            match rhs {
                Ok(v) => CheckCase::numeric(case, v, schlafli_s(n, z), 1e-9),
                Err(e) => CheckCase::failed(case, e, 1e-9),
            }
        })
        .collect()
}

fn poisson_suite(pc: &PoissonConfig) -> Vec<CheckCase> {
    [(2.5, 0.3), (4.0, 0.3), (1.5, 0.7), (0.5, 0.3)]
        .par_iter()
        .map(|&(nu, x)| {
            CheckCase::from_report(format!("nu={nu} x={x}"), poisson_j_series_check(nu, x, pc), 1e-4)
        })
        .collect()
}

fn series_007_suite() -> Vec<CheckCase> {
    [0.1, 0.3, 0.5, 0.7, 0.9]
        .iter()
        .map(|&x| {
            let case = format!("x={x}");
            match (sin_power_sum(0.5, x), series_007_rhs(x, 1e-13)) {
                (Ok(s), Ok(r)) => CheckCase::numeric(case, r, s, 1e-10),
                (Err(e), _) | (_, Err(e)) => CheckCase::failed(case, e, 1e-10),
            }
        })
        .collect()
}

fn denominator_suite(n_max: usize) -> Vec<CheckCase> {
    (1..=n_max.max(1))
        .into_par_iter()
        .map(|n| {
            let b = modified_bernoulli(n);
            let case = format!("n={n}");
            match (two_adic_valuation_prediction(n as u64), two_adic_valuation(b.denom())) {
                (Ok(pred), Some(v)) => {
                    let got = v as i64;
                    let mut c = CheckCase::numeric(case, got as f64, pred as f64, 0.5);
                    c.passed = got == pred;
                    c
                }
                (Err(e), _) => CheckCase::failed(case, e, 0.0),
                (_, None) => CheckCase::failed(case, Error::Domain("zero denominator".into()), 0.0),
            }
        })
        .collect()
}

fn sample_points() -> Vec<BigRational> {
    [(0, 1), (1, 2), (-3, 7), (5, 3), (22, 9), (-11, 4), (1, 64), (-9, 2)].iter().map(|&(p, q)| ratio(p, q)).collect()
}

fn shift_suite() -> Vec<CheckCase> {
    let points = sample_points();
    let mut cases = Vec::new();
    for n in 1..=15usize {
        for k in -5..=5i64 {
            for x in points.iter().take(3) {
                cases.push((n, k, x.clone()));
            }
        }
    }
    cases
        .par_iter()
        .map(|(n, k, x)| {
            let shifted = zagier_shift(*n, x, *k);
            let direct = zagier_eval(*n, &(x + ratio(*k, 1)));
            CheckCase::exact(format!("n={n} k={k} x={x}"), &shifted, &direct)
        })
        .collect()
}

/// `B*_n(-x-3) = (-1)^n B*_n(x)`.
fn reflection_suite() -> Vec<CheckCase> {
    let points = sample_points();
    let mut cases = Vec::new();
    for n in 1..=20usize {
        for x in &points {
            cases.push((n, x.clone()));
        }
    }
    cases
        .par_iter()
        .map(|(n, x)| {
            let left = zagier_eval(*n, &(-x - ratio(3, 1)));
            let mut right = zagier_eval(*n, x);
            if n % 2 == 1 {
                right = -right;
            }
            CheckCase::exact(format!("n={n} x={x}"), &left, &right)
        })
        .collect()
}

/// Runs every suite in declaration order.
pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    Identity::ALL.iter().map(|&id| run_suite(id, opts)).collect()
}
