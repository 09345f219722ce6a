use std::f64::consts::{PI, TAU};

use super::theorems::g_pair;
use super::{cheb_u, parity, EvalReport, Point};
use crate::error::{Error, Result};
use crate::exact::zagier_eval;
use crate::quad::integrate_breaks;
use crate::exact::{chebyshev_u, ratio};
use crate::series::{bessel_cos_series, cesaro_tail_mean, cos_2pi, g_tail_sum, hyperbolic_sum, sin_2pi, SeriesConfig, SeriesResult};
use crate::specfun::{bessel_j, dj_dnu_at_int, hankel_jy, p_func, schlafli_s, BesselConfig};
use crate::sum::ordered_parallel_sum;

const QUAD_TOL: f64 = 1e-13;
const QUAD_PANELS: usize = 20_000;
const G_TOL: f64 = 1e-15;

/// The four Chebyshev arguments `x/2, (x+1)/2, (1-x)/2, (2-x)/2`, given
/// `x` and `y = 1 - x`.
fn quad_args(x: f64, y: f64) -> [f64; 4] {
    [x / 2.0, (x + 1.0) / 2.0, y / 2.0, (y + 1.0) / 2.0]
}

/// `2 int_0^1 f(x) cos(2 pi m x) dx` (or `int_0^1 f` for `m = 0`) after
/// `x = sin^2(pi t / 2)`, which removes the square-root endpoint behaviour
/// of the arccos/arcsin and `g` terms.
fn fourier_coefficient<F: Fn(f64, f64) -> f64>(f: F, m: usize) -> Result<(f64, f64)> {
    let weight = if m == 0 { 1.0 } else { 2.0 };
    let integrand = |t: f64| {
        let (s, c) = (PI * t / 2.0).sin_cos();
        let (x, y) = (s * s, c * c);
        if x <= 0.0 || y <= 0.0 {
            return 0.0;
        }
        let jac = PI / 2.0 * (PI * t).sin();
        weight * f(x, y) * cos_2pi(m as f64 * x) * jac
    };
    let r = integrate_breaks(integrand, &[0.0, 0.25, 0.5, 0.75, 1.0], QUAD_TOL, 0.0, QUAD_PANELS)?;
    Ok((r.value, r.error))
}

/// `f(x, n) = 1/(2n) + ((-1)^n / (2 pi)) sum_a arccos(a) U_{2n-1}(a)` over the
/// four Chebyshev arguments.
fn p_kernel(n: usize, x: f64, y: f64) -> f64 {
    let k = 2 * n - 1;
    let s: f64 = quad_args(x, y).iter().map(|&a| a.acos() * cheb_u(k, a)).sum();
    0.5 / n as f64 + parity(n) / (2.0 * PI) * s
}

/// `h(x, n) = ((-1)^n / (4 pi)) sum_a arcsin(a) U_{2n-1}(a)
///  + ((-1)^{n+1} / 4^{n+1}) [sum_m g(m, n, x) + sum_m g(m, n, 1-x)]`.
fn dj_kernel(n: usize, x: f64, y: f64) -> f64 {
    let k = 2 * n - 1;
    let s: f64 = quad_args(x, y).iter().map(|&a| a.asin() * cheb_u(k, a)).sum();
    let r = n as f64;
    let g = match (g_tail_sum(r, x, 1, G_TOL), g_tail_sum(r, y, 1, G_TOL)) {
        (Ok(a), Ok(b)) => a.value + b.value,
        _ => f64::NAN,
    };
    parity(n) / (4.0 * PI) * s - parity(n) * 0.25f64.powi(n as i32 + 1) * g
}

/// Cosine coefficient `a_m` of the arccos–Chebyshev kernel by quadrature,
/// compared with `P_{2n}(4 pi m)`. For `m = 0` the mean value is compared
/// with 0.
pub fn fourier_coeff_p_check(n: usize, m: usize) -> Result<EvalReport> {
    if n == 0 {
        return Err(Error::Domain("fourier_coeff_p_check needs n >= 1".into()));
    }
    let (value, err) = fourier_coefficient(|x, y| p_kernel(n, x, y), m)?;
    let reference = if m == 0 { 0.0 } else { p_func(2 * n, 2.0 * TAU * m as f64)?.value };
    let meta = SeriesResult { value, terms_used: 0, tail_bound: err, accelerated: false };
    Ok(EvalReport::against("fourier_p", n, Some(Point::Float(m as f64)), reference, value, vec![meta]))
}

/// Cosine coefficient `b_m` of the arcsin–Chebyshev plus `g`-tail kernel by
/// quadrature, compared with `dJ_nu/dnu` at `nu = 2n`, `z = 4 pi m`. For
/// `m = 0` the mean value is compared with 0.
pub fn fourier_coeff_dj_check(n: usize, m: usize) -> Result<EvalReport> {
    if n == 0 {
        return Err(Error::Domain("fourier_coeff_dj_check needs n >= 1".into()));
    }
    let (value, err) = fourier_coefficient(|x, y| dj_kernel(n, x, y), m)?;
    let reference = if m == 0 { 0.0 } else { dj_dnu_at_int(2 * n, 2.0 * TAU * m as f64)?.value };
    let meta = SeriesResult { value, terms_used: 0, tail_bound: err, accelerated: false };
    Ok(EvalReport::against("fourier_dj", n, Some(Point::Float(m as f64)), reference, value, vec![meta]))
}

const A_DIRECT_TERMS: usize = 100_000;

/// `A(n, x)` two ways. The reference is the direct sum
/// `(-1)^{n+1} sum_m S_{2n}(4 pi m) cos(2 pi m x)`; the value is the closed form
///
/// `(-1)^n pi sum_m Y_{2n}(4 pi m) cos(2 pi m x) + (-1)^{n+1}/(2n)
///  + 2^{-(2n+1)} [sum_m g(m, n, x) + sum_m g(m, n, 1-x)]
///  - (1/4)[U_{2n-1}(x/2) + U_{2n-1}((x+1)/2) + U_{2n-1}((1-x)/2) + U_{2n-1}((2-x)/2)]`.
///
/// With rational `x` the report also carries the exact value of `A` implied
/// by `B*_{2n}(x) = (-1)^n/(2n) + A(n,x) + [U_{2n-1}(x/2) + U_{2n-1}((x+1)/2)]/2`.
pub fn a_function_two_ways(n: usize, x: &Point, cfg: &SeriesConfig) -> Result<EvalReport> {
    if n == 0 {
        return Err(Error::Domain("a_function_two_ways needs n >= 1".into()));
    }
    let xv = x.value();
    if !(xv > 0.0 && xv < 1.0) {
        return Err(Error::Domain(format!("x must lie in (0, 1), got {x}")));
    }
    let sign = -parity(n);
    let direct = sign * ordered_parallel_sum(1, A_DIRECT_TERMS + 1, |m| {
        schlafli_s(2 * n, 2.0 * TAU * m as f64) * cos_2pi(m as f64 * xv)
    });
    // summation by parts bound for the O(m^-2) tail
    let direct_bound = schlafli_s(2 * n, 2.0 * TAU * A_DIRECT_TERMS as f64) / (PI * xv).sin();
    let bessel = bessel_cos_series(n, xv, cfg)?;
    let (ga, gb) = g_pair(n as f64, xv, cfg.tol / 8.0)?;
    let k = 2 * n - 1;
    let u: f64 = quad_args(xv, 1.0 - xv).iter().map(|&a| cheb_u(k, a)).sum();
    let closed = bessel.value - parity(n) * 0.5 / n as f64 + 0.5f64.powi(2 * n as i32 + 1) * (ga.value + gb.value)
        - 0.25 * u;
    let direct_meta =
        SeriesResult { value: direct, terms_used: A_DIRECT_TERMS, tail_bound: direct_bound, accelerated: false };
    let mut report = EvalReport::against("a_function", n, Some(x.clone()), direct, closed, vec![direct_meta, bessel, ga, gb]);
    if x.is_rational() {
        let q = x.rational()?;
        let poly = chebyshev_u(k);
        let two = ratio(2, 1);
        let u_exact = (poly.eval(&(&q / &two)) + poly.eval(&((&q + ratio(1, 1)) / &two))) / &two;
        let sign_term = ratio(if n % 2 == 0 { 1 } else { -1 }, 2 * n as i64);
        report.exact = Some(zagier_eval(2 * n, &q) - sign_term - u_exact);
    }
    Ok(report)
}

/// Settings for the slow direct-summation side of [`poisson_j_series_check`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoissonConfig {
    pub terms: usize,
    /// Number of trailing partial sums averaged.
    pub window: usize,
}

impl Default for PoissonConfig {
    fn default() -> Self {
        Self { terms: 1_000_000, window: 10_000 }
    }
}

/// `sum_m J_nu(4 pi m) cos(2 pi m x)` by Cesàro-averaged direct summation
/// (the reference) against its closed form
///
/// `sum_a cos(nu arcsin a) / (4 pi sqrt(1 - a^2))
///  - sin(nu pi/2) 2^{-nu} / (2 pi) [sum_{m>=2} G(m+x, nu/2) + sum_{m>=3} G(m-x, nu/2)]`
///
/// over the four Chebyshev arguments `a`, with
/// `G(T, r) = (T - sqrt(T^2-4))^{2r} / sqrt(T^2-4)`.
pub fn poisson_j_series_check(nu: f64, x: f64, pc: &PoissonConfig) -> Result<EvalReport> {
    if !(nu > 0.0 && nu.is_finite()) || !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("poisson check needs nu > 0 and 0 < x < 1, got nu = {nu}, x = {x}")));
    }
    let bc = BesselConfig::default();
    // 4 pi m is a multiple of 2 pi, so the Hankel phase reduces exactly
    let phase = -nu * PI / 2.0 - PI / 4.0;
    let term = |m: usize| {
        let z = 2.0 * TAU * m as f64;
        let j = if bc.asymptotic(nu, z) {
            hankel_jy(nu, z, phase).0
        } else {
            bessel_j(nu, z).map(|r| r.value).unwrap_or(f64::NAN)
        };
        j * cos_2pi(m as f64 * x)
    };
    let lhs = cesaro_tail_mean(term, pc.terms, pc.window);
    let head: f64 = quad_args(x, 1.0 - x).iter().map(|&a| (nu * a.asin()).cos() / (2.0 * TAU * (1.0 - a * a).sqrt())).sum();
    let sine = (nu * PI / 2.0).sin();
    let mut meta = Vec::new();
    let tails = if sine.abs() > 1e-15 {
        let plus = hyperbolic_sum(x, 1.0, 2, nu / 2.0, 1e-14)?;
        let minus = hyperbolic_sum(-x, 1.0, 3, nu / 2.0, 1e-14)?;
        meta.push(plus);
        meta.push(minus);
        sine * 0.5f64.powf(nu) / TAU * (plus.value + minus.value)
    } else {
        0.0
    };
    let rhs = head - tails;
    Ok(EvalReport::against("poisson_j", 0, Some(Point::Float(x)), lhs, rhs, meta))
}

/// Truncated Fourier series of the Bernoulli polynomial `B_k(x)`, `k >= 1`:
/// `2(-1)^{n+1}(2n)! sum_{m<=M} cos(2 pi m x)/(2 pi m)^{2n}` for `k = 2n`,
/// `2(-1)^{n+1}(2n+1)! sum_{m<=M} sin(2 pi m x)/(2 pi m)^{2n+1}` for `k = 2n+1`.
pub fn bernoulli_fourier_eval(k: usize, x: f64, big_m: usize) -> Result<f64> {
    if k == 0 || big_m == 0 {
        return Err(Error::Domain("bernoulli_fourier_eval needs k >= 1 and M >= 1".into()));
    }
    let n = k / 2;
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    let sum = ordered_parallel_sum(1, big_m + 1, |m| {
        let t = m as f64 * x;
        let w = if k % 2 == 0 { cos_2pi(t) } else { sin_2pi(t) };
        w / (TAU * m as f64).powi(k as i32)
    });
    Ok(2.0 * -parity(n) * fact * sum)
}
