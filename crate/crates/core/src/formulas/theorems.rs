use std::f64::consts::{PI, SQRT_2, TAU};

use num_rational::BigRational;

use super::{cheb_u, parity, EvalReport, Point};
use crate::error::{Error, Result};
use crate::exact::{modified_bernoulli, zagier_eval};
use crate::series::{
    bessel_cos_series, bessel_sin_series, g_tail_sum, hyperbolic_sum, regularized_sum, SeriesConfig, SeriesResult,
    Weight,
};
use crate::specfun::{bessel_y_int, hurwitz_zeta_half};

fn unit_point(x: &Point) -> Result<f64> {
    let v = x.value();
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::Domain(format!("x must lie in (0, 1), got {x}")));
    }
    Ok(v)
}

/// `(1/4)[U_k((x+1)/2) + U_k(x/2) + U_k((x-1)/2) + U_k((x-2)/2)]`
pub(crate) fn u_quad(k: usize, x: f64) -> f64 {
    0.25 * (cheb_u(k, (x + 1.0) / 2.0) + cheb_u(k, x / 2.0) + cheb_u(k, (x - 1.0) / 2.0) + cheb_u(k, (x - 2.0) / 2.0))
}

/// `sum_{m>=1} g(m, r, x)` and `sum_{m>=1} g(m, r, 1-x)`.
pub(crate) fn g_pair(r: f64, x: f64, tol: f64) -> Result<(SeriesResult, SeriesResult)> {
    Ok((g_tail_sum(r, x, 1, tol)?, g_tail_sum(r, 1.0 - x, 1, tol)?))
}

/// `B*_{2n}(x)` for `0 < x < 1` from
///
/// `sum_m (-1)^n pi Y_{2n}(4 pi m) cos(2 pi m x)
///  + (1/4)[U_{2n-1}((x+1)/2) + U_{2n-1}(x/2) + U_{2n-1}((x-1)/2) + U_{2n-1}((x-2)/2)]
///  + 2^{-(2n+1)} [sum_m g(m, n, x) + sum_m g(m, n, 1-x)]`.
pub fn zagier_even_formula(n: usize, x: &Point, cfg: &SeriesConfig) -> Result<EvalReport> {
    if n == 0 {
        return Err(Error::Domain("zagier_even_formula needs n >= 1".into()));
    }
    let xv = unit_point(x)?;
    let bessel = bessel_cos_series(n, xv, cfg)?;
    let (ga, gb) = g_pair(n as f64, xv, cfg.tol / 8.0)?;
    let value = bessel.value + u_quad(2 * n - 1, xv) + 0.5f64.powi(2 * n as i32 + 1) * (ga.value + gb.value);
    let exact = zagier_eval(2 * n, &x.rational()?);
    Ok(EvalReport::against_exact("zagier_even", n, Some(x.clone()), exact, value, vec![bessel, ga, gb]))
}

/// `B*_{2n+1}(x)` for `0 < x < 1` from
///
/// `sum_m (-1)^n pi Y_{2n+1}(4 pi m) sin(2 pi m x)
///  + (1/4)[U_{2n}((x+1)/2) + U_{2n}(x/2) + U_{2n}((x-1)/2) + U_{2n}((x-2)/2)]
///  + 2^{-(2n+2)} [sum_m g(m, n+1/2, x) - sum_m g(m, n+1/2, 1-x)]`.
pub fn zagier_odd_formula(n: usize, x: &Point, cfg: &SeriesConfig) -> Result<EvalReport> {
    let xv = unit_point(x)?;
    let bessel = bessel_sin_series(n, xv, cfg)?;
    let (ga, gb) = g_pair(n as f64 + 0.5, xv, cfg.tol / 8.0)?;
    let value = bessel.value + u_quad(2 * n, xv) + 0.5f64.powi(2 * n as i32 + 2) * (ga.value - gb.value);
    let exact = zagier_eval(2 * n + 1, &x.rational()?);
    Ok(EvalReport::against_exact("zagier_odd", n, Some(x.clone()), exact, value, vec![bessel, ga, gb]))
}

/// `B*_{2n}` from
///
/// `-n + sum_m [(-1)^n pi Y_{2n}(4 pi m) + 1/(2 sqrt m)] - zeta(1/2)/2
///  + sum_m [m(m+4)]^{-1/2} ((sqrt(m+4) - sqrt m)/2)^{4n}`.
pub fn zagier_number_formula(n: usize, cfg: &SeriesConfig) -> Result<EvalReport> {
    if n == 0 {
        return Err(Error::Domain("zagier_number_formula needs n >= 1".into()));
    }
    let bessel = regularized_sum(2 * n, 2.0 * TAU, Weight::Cos, 0.0, cfg)?;
    // the algebraic term equals 2^{-2n} g(m, n, 1)
    let g = g_tail_sum(n as f64, 1.0, 1, cfg.tol / 4.0)?;
    let zeta_half = hurwitz_zeta_half(1.0)?.value;
    let value = -(n as f64) + bessel.value - 0.5 * zeta_half + 0.5f64.powi(2 * n as i32) * g.value;
    Ok(EvalReport::against_exact("zagier_number", n, None, modified_bernoulli(2 * n), value, vec![bessel, g]))
}

/// `B*_{2n}(-3/2) + B*_{2n}` from
///
/// `2 sum_m [(-1)^n pi Y_{2n}(8 pi m) + 1/(2 sqrt(2m))] - n - (U_{2n-1}(1/4) + U_{2n-1}(3/4))/2
///  - zeta(1/2)/sqrt 2 + 2^{-(4n-1)} sum_m (m+4-sqrt(m(m+8)))^{2n} / sqrt(m(m+8))`.
pub fn zagier_type_sum(n: usize, cfg: &SeriesConfig) -> Result<EvalReport> {
    if n == 0 {
        return Err(Error::Domain("zagier_type_sum needs n >= 1".into()));
    }
    let bessel = regularized_sum(2 * n, 4.0 * TAU, Weight::Cos, 0.0, cfg)?;
    // 2^{-(4n-1)} (m+4-sqrt(m(m+8)))^{2n} / sqrt(m(m+8)) = 2^{-2n} G(2 + m/2, n)
    let g = hyperbolic_sum(2.0, 0.5, 1, n as f64, cfg.tol / 4.0)?;
    let k = 2 * n - 1;
    let zeta_half = hurwitz_zeta_half(1.0)?.value;
    let value = 2.0 * bessel.value - n as f64 - 0.5 * (cheb_u(k, 0.25) + cheb_u(k, 0.75)) - zeta_half / SQRT_2
        + 0.5f64.powi(2 * n as i32) * g.value;
    let three_halves = BigRational::new((-3).into(), 2.into());
    let exact = zagier_eval(2 * n, &three_halves) + modified_bernoulli(2 * n);
    Ok(EvalReport::against_exact("zagier_type", n, None, exact, value, vec![bessel, g]))
}

fn y_int(n: usize, z: f64) -> f64 {
    bessel_y_int(n, z).map(|r| r.value).unwrap_or(f64::NAN)
}

/// One-term large-`n` approximation of `B*_{2n}(x)`: `(-1)^n pi Y_{2n}(4 pi) cos(2 pi x)`,
/// or `(-1)^{n+1} pi Y_{2n}(8 pi)` at `x = 1/4, 3/4`, where the cosine vanishes.
pub fn even_asymptotic(n: usize, x: f64) -> f64 {
    if x == 0.25 || x == 0.75 {
        return -parity(n) * PI * y_int(2 * n, 4.0 * TAU);
    }
    parity(n) * PI * y_int(2 * n, 2.0 * TAU) * (TAU * x).cos()
}

/// `(-1)^n pi Y_{2n+1}(4 pi) sin(2 pi x)`, the large-`n` form of `B*_{2n+1}(x)`.
pub fn odd_asymptotic(n: usize, x: f64) -> f64 {
    parity(n) * PI * y_int(2 * n + 1, 2.0 * TAU) * (TAU * x).sin()
}

/// `(-1)^n pi Y_{2n}(4 pi)`, the large-`n` form of `B*_{2n}`.
pub fn zero_index_asymptotic(n: usize) -> f64 {
    parity(n) * PI * y_int(2 * n, 2.0 * TAU)
}
