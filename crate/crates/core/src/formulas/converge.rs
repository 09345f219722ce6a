use std::f64::consts::{PI, TAU};
use std::str::FromStr;

use num_traits::ToPrimitive;

use super::theorems::{g_pair, u_quad};
use super::Point;
use crate::error::{Error, Result};
use crate::exact::{modified_bernoulli, zagier_eval};
use crate::series::{
    cos_power_sum, g_tail_sum, naive_partial_sum, regularized_sum_fixed, regularized_term, sin_power_sum, SeriesConfig,
    Weight,
};
use crate::specfun::hurwitz_zeta_half;
use crate::sum::ordered_parallel_sum;

/// Which slowly convergent series a convergence study follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvergenceSeries {
    /// `sum_m (-1)^n pi Y_{2n}(4 pi m) cos(2 pi m x)`
    BesselCos,
    /// `sum_m (-1)^n pi Y_{2n+1}(4 pi m) sin(2 pi m x)`
    BesselSin,
    /// `sum_m [(-1)^n pi Y_{2n}(4 pi m) + 1/(2 sqrt m)]`
    ZagierNumber,
}

impl ConvergenceSeries {
    pub fn name(self) -> &'static str {
        match self {
            ConvergenceSeries::BesselCos => "bessel-cos",
            ConvergenceSeries::BesselSin => "bessel-sin",
            ConvergenceSeries::ZagierNumber => "zagier-number",
        }
    }
}

impl FromStr for ConvergenceSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bessel-cos" => Ok(ConvergenceSeries::BesselCos),
            "bessel-sin" => Ok(ConvergenceSeries::BesselSin),
            "zagier-number" => Ok(ConvergenceSeries::ZagierNumber),
            _ => Err(Error::Domain(format!("unknown series {s:?}"))),
        }
    }
}

/// Plain and accelerated partial sums after `terms` explicit Bessel
/// evaluations, and their distance from the exact target.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub terms: usize,
    pub naive: f64,
    pub naive_error: f64,
    pub accelerated: f64,
    pub accelerated_error: f64,
    pub tail_bound: f64,
    /// The value the series must take for its formula to be exact.
    pub target: f64,
}

/// Convergence of one series in the number of explicit terms.
///
/// The target is derived from exact arithmetic: for the Bessel–trigonometric
/// series it is the exact Zagier polynomial value minus the Chebyshev and
/// `g` parts of its formula, for the zero-argument series the same with
/// `B*_{2n}`. The accelerated column uses `cfg.tail_order` tail corrections.
/// `x` is ignored for [`ConvergenceSeries::ZagierNumber`].
pub fn convergence_study(
    series: ConvergenceSeries,
    n: usize,
    x: &Point,
    terms: &[usize],
    cfg: &SeriesConfig,
) -> Result<Vec<ConvergenceRow>> {
    if n == 0 && series != ConvergenceSeries::BesselSin {
        return Err(Error::Domain(format!("{} needs n >= 1", series.name())));
    }
    let l = 2.0 * TAU;
    let (nu, weight, xv, target, half) = match series {
        ConvergenceSeries::BesselCos | ConvergenceSeries::BesselSin => {
            let xv = x.value();
            cfg.check_window(xv)?;
            let q = x.rational()?;
            let amp = (PI / l).sqrt();
            if series == ConvergenceSeries::BesselCos {
                let exact = zagier_eval(2 * n, &q).to_f64().unwrap_or(f64::NAN);
                let (ga, gb) = g_pair(n as f64, xv, 1e-15)?;
                let target = exact - u_quad(2 * n - 1, xv) - 0.5f64.powi(2 * n as i32 + 1) * (ga.value + gb.value);
                (2 * n, Weight::Cos, xv, target, amp * cos_power_sum(0.5, xv)?)
            } else {
                let exact = zagier_eval(2 * n + 1, &q).to_f64().unwrap_or(f64::NAN);
                let (ga, gb) = g_pair(n as f64 + 0.5, xv, 1e-15)?;
                let target = exact - u_quad(2 * n, xv) - 0.5f64.powi(2 * n as i32 + 2) * (ga.value - gb.value);
                (2 * n + 1, Weight::Sin, xv, target, amp * sin_power_sum(0.5, xv)?)
            }
        }
        ConvergenceSeries::ZagierNumber => {
            let exact = modified_bernoulli(2 * n).to_f64().unwrap_or(f64::NAN);
            let g = g_tail_sum(n as f64, 1.0, 1, 1e-15)?;
            let zeta_half = hurwitz_zeta_half(1.0)?.value;
            let target = exact + n as f64 + 0.5 * zeta_half - 0.5f64.powi(2 * n as i32) * g.value;
            (2 * n, Weight::Cos, 0.0, target, 0.0)
        }
    };
    let regularized = series == ConvergenceSeries::ZagierNumber;
    terms
        .iter()
        .map(|&m| {
            // the zero-argument series is already regularized; its plain
            // partial sums converge like M^{-1/2}
            let naive = if regularized {
                ordered_parallel_sum(1, m + 1, |k| regularized_term(nu, l, k, &cfg.bessel))
            } else {
                naive_partial_sum(nu, l, weight, xv, m, &cfg.bessel)
            };
            let (reg, bound) = regularized_sum_fixed(nu, l, weight, xv, m, cfg.tail_order, &cfg.bessel)?;
            let accelerated = reg - half;
            Ok(ConvergenceRow {
                terms: m,
                naive,
                naive_error: (naive - target).abs(),
                accelerated,
                accelerated_error: (accelerated - target).abs(),
                tail_bound: bound,
                target,
            })
        })
        .collect()
}
