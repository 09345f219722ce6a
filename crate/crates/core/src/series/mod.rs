//! Accelerated evaluation of the infinite series in the exact formulas.
//!
//! The Bessel–trigonometric (Schlömilch) series converge only conditionally,
//! like `sum cos(2 pi m x) / sqrt(m)`. They are evaluated by adding
//! `sqrt(pi / z)` to each Bessel term, which cancels the `m^{-1/2}` part,
//! subtracting the same amount back through a closed half-integer trig sum,
//! and replacing the tail of the regularized series by its large-argument
//! expansion summed with further closed trig sums.

mod bessel_series;
mod cesaro;
mod gterm;
mod trig;

pub use bessel_series::{
    bessel_cos_series, bessel_sin_series, naive_partial_sum, regularized_sum, regularized_sum_fixed,
    regularized_term, schlomilch_sum, tail_coefficients, Weight,
};
pub use cesaro::cesaro_tail_mean;
pub use gterm::{g_tail_sum, g_term, hyperbolic_g, hyperbolic_sum, telescope_sum};
pub use trig::{cos_power_sum, series_007_rhs, sin_power_sum, trig_power_sums, TrigPowerSums};

use crate::error::{Error, Result};
use crate::specfun::BesselConfig;

/// Value of an infinite sum together with how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Number of explicitly evaluated terms.
    pub terms_used: usize,
    /// Estimated bound on the error of the truncated tail treatment.
    pub tail_bound: f64,
    pub accelerated: bool,
}

/// Truncation policy shared by the series evaluators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesConfig {
    pub tol: f64,
    /// Largest number of explicit Bessel terms before giving up.
    pub max_terms: usize,
    /// Number of large-argument correction orders summed in closed form.
    pub tail_order: usize,
    pub min_terms: usize,
    /// Admissible `x` for the Bessel–trigonometric series.
    pub window: (f64, f64),
    pub bessel: BesselConfig,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_terms: 20_000,
            tail_order: 2,
            min_terms: 16,
            window: (0.01, 0.99),
            bessel: BesselConfig::default(),
        }
    }
}

impl SeriesConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }

    pub(crate) fn check_window(&self, x: f64) -> Result<()> {
        let (lo, hi) = self.window;
        if x.is_nan() || x < lo || x > hi {
            return Err(Error::OutsideWindow { x, lo, hi });
        }
        Ok(())
    }
}

/// `cos(2 pi t)` / `sin(2 pi t)` after reducing `t` modulo 1.
pub(crate) fn cos_2pi(t: f64) -> f64 {
    (std::f64::consts::TAU * t.rem_euclid(1.0)).cos()
}

pub(crate) fn sin_2pi(t: f64) -> f64 {
    (std::f64::consts::TAU * t.rem_euclid(1.0)).sin()
}
