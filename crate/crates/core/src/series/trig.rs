use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use statrs::function::gamma::gamma;

use super::gterm::hyperbolic_sum;
use crate::error::{Error, Result};
use crate::specfun::{hurwitz_zeta_half, riemann_zeta};

/// `sum cos(2 pi m x)/sqrt(m)` and `sum sin(2 pi m x)/sqrt(m)`, plus the same
/// pair for exponents `k/2` with odd `k >= 3`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPowerSums {
    pub x: f64,
    pub cos_sum_half: f64,
    pub sin_sum_half: f64,
    /// `k -> (cos sum, sin sum)` for exponent `k/2`.
    pub higher: BTreeMap<u32, (f64, f64)>,
}

fn check_unit(x: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("trig power sums need 0 < x < 1, got {x}")));
    }
    Ok(())
}

/// `[zeta(1/2, x) + zeta(1/2, 1-x)] / 2` and the difference counterpart.
fn half_pair(x: f64) -> Result<(f64, f64)> {
    let a = hurwitz_zeta_half(x)?.value;
    let b = hurwitz_zeta_half(1.0 - x)?.value;
    Ok((0.5 * (a + b), 0.5 * (a - b)))
}

/// `sum_{m>=1} e^{i m theta} / m^s` for `0 < theta <= pi` and non-integer
/// `s > 0`, from `Gamma(1-s)(-i theta)^{s-1} + sum_k zeta(s-k)(i theta)^k/k!`.
fn periodic_zeta(s: f64, theta: f64) -> Result<(f64, f64)> {
    let g = gamma(1.0 - s) * theta.powf(s - 1.0);
    let phase = PI * (s - 1.0) / 2.0;
    let mut re = g * phase.cos();
    let mut im = -g * phase.sin();
    let mut pow = 1.0;
    for k in 0..400usize {
        if k > 0 {
            pow *= theta / k as f64;
        }
        let t = riemann_zeta(s - k as f64)?.value * pow;
        match k % 4 {
            0 => re += t,
            1 => im += t,
            2 => re -= t,
            _ => im -= t,
        }
        if k > 4 && t.abs() < 1e-18 * (1.0 + re.abs() + im.abs()) {
            return Ok((re, im));
        }
    }
    Err(Error::NonConvergence { best: re, bound: f64::NAN, terms: 400, tol: 1e-18 })
}

/// `(C_s(x), S_s(x))`, reflected to `x <= 1/2` first.
fn power_sums(s: f64, x: f64) -> Result<(f64, f64)> {
    check_unit(x)?;
    if !(s > 0.0) || s.fract() == 0.0 {
        return Err(Error::Domain(format!("trig power sums need non-integer s > 0, got {s}")));
    }
    if s == 0.5 {
        return half_pair(x);
    }
    let (xr, flip) = if x > 0.5 { (1.0 - x, -1.0) } else { (x, 1.0) };
    let (c, si) = periodic_zeta(s, TAU * xr)?;
    Ok((c, flip * si))
}

/// `C_s(x) = sum_{m>=1} cos(2 pi m x) / m^s` for non-integer `s > 0` and
/// `0 < x < 1`. At `s = 1/2` this is `[zeta(1/2,x) + zeta(1/2,1-x)]/2`.
pub fn cos_power_sum(s: f64, x: f64) -> Result<f64> {
    Ok(power_sums(s, x)?.0)
}

/// `S_s(x) = sum_{m>=1} sin(2 pi m x) / m^s`, companion of [`cos_power_sum`].
pub fn sin_power_sum(s: f64, x: f64) -> Result<f64> {
    Ok(power_sums(s, x)?.1)
}

/// Half-power sums at `x` together with exponents 3/2, 5/2, 7/2.
pub fn trig_power_sums(x: f64) -> Result<TrigPowerSums> {
    check_unit(x)?;
    let (cos_sum_half, sin_sum_half) = half_pair(x)?;
    let mut higher = BTreeMap::new();
    for k in [3u32, 5, 7] {
        higher.insert(k, power_sums(k as f64 / 2.0, x)?);
    }
    Ok(TrigPowerSums { x, cos_sum_half, sin_sum_half, higher })
}

/// Algebraic form of the half-power sine sum:
/// `1/(2 sqrt x) - (x/sqrt 2) sum_{m>=1} [m + sqrt(m^2-x^2)]^{-1/2} (m^2-x^2)^{-1/2}`.
pub fn series_007_rhs(x: f64, tol: f64) -> Result<f64> {
    check_unit(x)?;
    // term = sqrt(2) x^{-3/2} G(2m/x, 1/4)
    let g = hyperbolic_sum(0.0, 2.0 / x, 1, 0.25, tol * x.powf(1.5))?;
    let sum = std::f64::consts::SQRT_2 / x.powf(1.5) * g.value;
    Ok(0.5 / x.sqrt() - x / std::f64::consts::SQRT_2 * sum)
}
