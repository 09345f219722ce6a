use std::f64::consts::FRAC_PI_2;

use super::bessel::bessel_j_int_full;
use super::{digamma_int, EvalResult, Method};
use crate::error::{Error, Result};
use crate::quad::integrate_breaks;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoatesConfig {
    /// Upper limit on the number of quadrature panels.
    pub max_panels: usize,
    /// Absolute tolerance of the finite-range quadrature.
    pub abs_tol: f64,
}

impl Default for CoatesConfig {
    fn default() -> Self {
        Self { max_panels: 200_000, abs_tol: 1e-12 }
    }
}

fn check(n: usize, u: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("Coates integral needs n >= 1".into()));
    }
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::Domain(format!("Coates integral needs u > 0, got {u}")));
    }
    Ok(())
}

/// `(-1)^{n+1} int_0^inf e^{-2n phi} cos(u cosh phi) dphi` with default settings.
pub fn coates_integral(n: usize, u: f64) -> Result<EvalResult> {
    coates_integral_with(n, u, &CoatesConfig::default())
}

/// Direct quadrature of the Coates integral.
///
/// `[0, Phi]` is cut into panels on which `u cosh phi` advances by at most a
/// quarter period and `phi` by at most 1/4. The remainder beyond `Phi` is
/// replaced by two terms of integration by parts against the phase
/// `u cosh phi`, and `Phi` is chosen so the first neglected term is below
/// `1e-14`.
pub fn coates_integral_with(n: usize, u: f64, cfg: &CoatesConfig) -> Result<EvalResult> {
    check(n, u)?;
    let two_n = 2.0 * n as f64;
    let f = |phi: f64| (-two_n * phi).exp() * (u * phi.cosh()).cos();
    // amplitude over phase speed, e^{-2n phi} / (u sinh phi)
    let ratio = |phi: f64| (-two_n * phi).exp() / (u * phi.sinh());
    let phi_amp = (1e16f64).ln() / two_n;
    let mut phi_max = 0.5;
    while phi_max < phi_amp {
        let r = ratio(phi_max);
        let speed = u * phi_max.sinh();
        if r * ((two_n + 2.0) / speed).powi(2) < 1e-14 {
            break;
        }
        phi_max += 0.05;
    }
    let phi_max = phi_max.min(phi_amp);

    let mut breaks = vec![0.0];
    let mut phi = 0.0;
    while phi < phi_max {
        // largest step with u (cosh(phi+d) - cosh phi) <= pi/2
        let c = phi.cosh();
        let target = (c + FRAC_PI_2 / u).acosh();
        let step = (target - phi).min(0.25);
        phi = (phi + step).min(phi_max);
        breaks.push(phi);
        if breaks.len() > cfg.max_panels {
            return Err(Error::Quadrature { estimate: f64::NAN, error: f64::INFINITY, limit: cfg.max_panels });
        }
    }
    let q = integrate_breaks(f, &breaks, cfg.abs_tol, 0.0, cfg.max_panels)?;

    // tail: -(g/theta') sin(theta) - (g1/theta') cos(theta) with g1 = (g/theta')'
    let r = ratio(phi_max);
    let theta = u * phi_max.cosh();
    let speed = u * phi_max.sinh();
    let g1 = -r * (two_n + 1.0 / phi_max.tanh());
    let tail = -r * theta.sin() - g1 / speed * theta.cos();
    let tail_err = r * ((two_n + 2.0) / speed).powi(2) + (-two_n * phi_amp).exp();

    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(EvalResult::new(sign * (q.value + tail), q.error + tail_err, Method::Quadrature))
}

/// Bessel-series evaluation of the Coates integral:
/// `(log(u/2) - psi(2n+1)) J_{2n}(u) - 1/2 sum_k (-1)^k/k (J_{2n+2k} + J_{2n-2k})
///  - sum_k (-1)^k/(k+2n) J_{2n+2k}`.
pub fn coates_series(n: usize, u: f64) -> Result<EvalResult> {
    check(n, u)?;
    let j = bessel_j_int_full(2 * n, u);
    let at = |m: i64| j.get(m.unsigned_abs() as usize).copied().unwrap_or(0.0);
    let nn = 2 * n as i64;
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    let mut abs = 0.0;
    let mut k = 1i64;
    while ((nn + 2 * k) as usize) < j.len() || ((2 * k - nn) as usize) < j.len() {
        let kf = k as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let a = sign / kf * (at(nn + 2 * k) + at(nn - 2 * k));
        let b = sign / (kf + nn as f64) * at(nn + 2 * k);
        s1 += a;
        s2 += b;
        abs += a.abs() + b.abs();
        k += 1;
    }
    let lead = (0.5 * u).ln() - digamma_int(2 * n + 1)?;
    let value = lead * at(nn) - 0.5 * s1 - s2;
    let err = 16.0 * f64::EPSILON * (abs + (lead * at(nn)).abs());
    Ok(EvalResult::new(value, err, Method::Series))
}

/// Residual of `w'' + w'/u + (1 - 4n^2/u^2) w - 2n (-1)^n cos(u) / u^2` for
/// `w = coates_series(n, .)`, with derivatives from five-point differences
/// of step `h`.
pub fn coates_ode_residual(n: usize, u: f64, h: f64) -> Result<f64> {
    if !(h > 0.0 && u - 2.0 * h > 0.0) {
        return Err(Error::Domain(format!("need 0 < 2h < u, got h = {h}, u = {u}")));
    }
    let w = |x: f64| coates_series(n, x).map(|r| r.value);
    let (m2, m1, c, p1, p2) = (w(u - 2.0 * h)?, w(u - h)?, w(u)?, w(u + h)?, w(u + 2.0 * h)?);
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2 = (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
    let nn = (2 * n) as f64;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(d2 + d1 / u + c * (1.0 - nn * nn / (u * u)) - nn * sign * u.cos() / (u * u))
}
