use std::f64::consts::{PI, TAU};

use super::{cos_2pi, cos_power_sum, sin_2pi, sin_power_sum, SeriesConfig, SeriesResult};
use crate::error::{Error, Result};
use crate::specfun::{bessel_y_int_with, hankel_coefficients, hankel_pq, hurwitz_zeta, BesselConfig};
use crate::sum::ordered_parallel_sum;

/// Trigonometric weight `cos(2 pi m x)` or `sin(2 pi m x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    Cos,
    Sin,
}

impl Weight {
    fn at(self, t: f64) -> f64 {
        match self {
            Weight::Cos => cos_2pi(t),
            Weight::Sin => sin_2pi(t),
        }
    }
}

const MAX_TAIL_ORDER: usize = 12;

fn sign(nu: usize) -> f64 {
    if (nu / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(-1)^{floor(nu/2)} pi Y_nu(l m) + sqrt(pi / (l m))` for `l` a positive
/// multiple of `2 pi`. The bracket decays like `m^{-3/2}`; past the Bessel
/// crossover it is formed directly from the Hankel sums to avoid cancelling
/// the leading term.
pub fn regularized_term(nu: usize, l: f64, m: usize, cfg: &BesselConfig) -> f64 {
    let z = l * m as f64;
    let nuf = nu as f64;
    if cfg.asymptotic(nuf, z) {
        let h = hankel_pq(nuf, z);
        let sigma_q = if nu % 2 == 0 { 1.0 } else { -1.0 };
        return (PI / z).sqrt() * (-h.p_minus_one + sigma_q * h.q);
    }
    let y = bessel_y_int_with(nu, z, cfg).map(|r| r.value).unwrap_or(f64::NAN);
    sign(nu) * PI * y + (PI / z).sqrt()
}

/// Coefficients `c_1, ..., c_count` of the expansion
/// `regularized_term(nu, l, m) ~ sum_j c_j m^{-j-1/2}`.
pub fn tail_coefficients(nu: usize, l: f64, count: usize) -> Vec<f64> {
    let a = hankel_coefficients(nu as f64, count + 1);
    let sigma_q = if nu % 2 == 0 { 1.0 } else { -1.0 };
    let scale = (PI / l).sqrt();
    (1..=count)
        .map(|j| {
            let k = j / 2;
            let alt = if k % 2 == 0 { 1.0 } else { -1.0 };
            let d = if j % 2 == 0 { -alt * a[j] } else { sigma_q * alt * a[j] };
            scale * d / l.powi(j as i32)
        })
        .collect()
}

/// True when `x` is an integer, so every weight equals `cos 0` or `sin 0`.
fn integral_point(x: f64) -> bool {
    x.fract() == 0.0
}

/// `sum_{m > big_m} w(m x) / m^s`.
fn trig_tail(weight: Weight, s: f64, x: f64, big_m: usize) -> Result<f64> {
    if integral_point(x) {
        return match weight {
            Weight::Cos => Ok(hurwitz_zeta(s, big_m as f64 + 1.0)?.value),
            Weight::Sin => Ok(0.0),
        };
    }
    let xr = x.rem_euclid(1.0);
    let full = match weight {
        Weight::Cos => cos_power_sum(s, xr)?,
        Weight::Sin => sin_power_sum(s, xr)?,
    };
    let head = ordered_parallel_sum(1, big_m + 1, |m| weight.at(m as f64 * x) / (m as f64).powf(s));
    Ok(full - head)
}

/// Bound on `sum_{m > big_m} w(m x) m^{-e}`: the integral comparison when
/// every weight is `cos 0`, otherwise Abel summation with partial weight sums
/// at most `1 / |sin(pi x)|`.
fn tail_scale(x: f64, e: f64, big_m: f64) -> f64 {
    if integral_point(x) {
        big_m.powf(1.0 - e) / (e - 1.0)
    } else {
        big_m.powf(-e) / (PI * x).sin().abs()
    }
}

/// Twice the size of the first two omitted orders past `order`.
fn remainder_bound(c: &[f64], order: usize, x: f64, big_m: usize) -> f64 {
    (order..order + 2).map(|i| 2.0 * c[i].abs() * tail_scale(x, i as f64 + 1.5, big_m as f64)).sum()
}

/// `sum_{m>=1} regularized_term(nu, l, m) w(m x)` with exactly `big_m`
/// explicit terms and `order` tail corrections. Returns the value and the
/// bound on the neglected part.
pub fn regularized_sum_fixed(
    nu: usize,
    l: f64,
    weight: Weight,
    x: f64,
    big_m: usize,
    order: usize,
    cfg: &BesselConfig,
) -> Result<(f64, f64)> {
    if big_m == 0 {
        return Err(Error::Domain("at least one explicit term is required".into()));
    }
    let explicit = ordered_parallel_sum(1, big_m + 1, |m| regularized_term(nu, l, m, cfg) * weight.at(m as f64 * x));
    let c = tail_coefficients(nu, l, order + 2);
    let mut tail = 0.0;
    for (j, cj) in c.iter().take(order).enumerate() {
        tail += cj * trig_tail(weight, j as f64 + 1.5, x, big_m)?;
    }
    let bound = remainder_bound(&c, order, x, big_m) + 4.0 * f64::EPSILON * big_m as f64;
    let value = explicit + tail;
    if !value.is_finite() {
        return Err(Error::Domain(format!("non-finite regularized sum for nu = {nu}, x = {x}")));
    }
    Ok((value, bound))
}

/// Smallest explicit term count for which `order` corrections meet `target`,
/// or `None` if the expansion is not yet usable there.
fn terms_needed(c: &[f64], nu: usize, l: f64, x: f64, order: usize, target: f64, min_terms: usize) -> Option<usize> {
    let need = (order..order + 2)
        .map(|i| {
            let e = i as f64 + 1.5;
            let k = 4.0 * c[i].abs() / target;
            if integral_point(x) {
                (k / (e - 1.0)).powf(1.0 / (e - 1.0)).ceil()
            } else {
                (k / (PI * x).sin().abs()).powf(1.0 / e).ceil()
            }
        })
        .fold(1.0, f64::max);
    // the expansion must already be decreasing at the cut
    let a = hankel_coefficients(nu as f64, order + 2);
    let ratio_cut = (a[order + 1] / a[order]).abs() / l;
    let m = need.max(2.0 * ratio_cut).max(min_terms as f64);
    if m.is_finite() && m < 1e12 {
        Some(m as usize)
    } else {
        None
    }
}

/// `sum_{m>=1} regularized_term(nu, l, m) w(m x)`. The explicit term count
/// and tail order are the cheapest pair meeting `cfg.tol`, with at least
/// `cfg.tail_order` corrections.
pub fn regularized_sum(nu: usize, l: f64, weight: Weight, x: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    if !(l > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("bad regularized sum arguments l = {l}, x = {x}")));
    }
    let max_order = cfg.tail_order.max(MAX_TAIL_ORDER);
    let c = tail_coefficients(nu, l, max_order + 2);
    let target = 0.5 * cfg.tol;
    let mut best: Option<(usize, usize)> = None;
    for order in cfg.tail_order..=max_order {
        if let Some(m) = terms_needed(&c, nu, l, x, order, target, cfg.min_terms) {
            if best.is_none_or(|(bm, _)| m < bm) {
                best = Some((m, order));
            }
        }
    }
    let (big_m, order) = best.unwrap_or((cfg.max_terms, max_order));
    if big_m > cfg.max_terms {
        let (value, bound) = regularized_sum_fixed(nu, l, weight, x, cfg.max_terms, order, &cfg.bessel)?;
        return Err(Error::NonConvergence { best: value, bound, terms: cfg.max_terms, tol: cfg.tol });
    }
    let (value, bound) = regularized_sum_fixed(nu, l, weight, x, big_m, order, &cfg.bessel)?;
    Ok(SeriesResult { value, terms_used: big_m, tail_bound: bound, accelerated: true })
}

/// `sum_{m>=1} (-1)^{floor(nu/2)} pi Y_nu(l m) w(m x)` for `0 < x < 1`,
/// the conditionally convergent series itself.
pub fn schlomilch_sum(nu: usize, l: f64, weight: Weight, x: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("Schlömilch series needs 0 < x < 1, got {x}")));
    }
    let half = match weight {
        Weight::Cos => cos_power_sum(0.5, x)?,
        Weight::Sin => sin_power_sum(0.5, x)?,
    };
    let shift = (PI / l).sqrt() * half;
    match regularized_sum(nu, l, weight, x, cfg) {
        Ok(reg) => Ok(SeriesResult { value: reg.value - shift, ..reg }),
        Err(Error::NonConvergence { best, bound, terms, tol }) => {
            Err(Error::NonConvergence { best: best - shift, bound, terms, tol })
        }
        Err(e) => Err(e),
    }
}

/// `sum_{m>=1} (-1)^n pi Y_{2n}(4 pi m) cos(2 pi m x)`.
pub fn bessel_cos_series(n: usize, x: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    if n == 0 {
        return Err(Error::Domain("bessel_cos_series needs n >= 1".into()));
    }
    cfg.check_window(x)?;
    schlomilch_sum(2 * n, 2.0 * TAU, Weight::Cos, x, cfg)
}

/// `sum_{m>=1} (-1)^n pi Y_{2n+1}(4 pi m) sin(2 pi m x)`.
pub fn bessel_sin_series(n: usize, x: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    cfg.check_window(x)?;
    if x == 0.5 {
        return Ok(SeriesResult { value: 0.0, terms_used: 0, tail_bound: 0.0, accelerated: false });
    }
    schlomilch_sum(2 * n + 1, 2.0 * TAU, Weight::Sin, x, cfg)
}

/// Plain partial sum `sum_{m<=big_m} (-1)^{floor(nu/2)} pi Y_nu(l m) w(m x)`.
pub fn naive_partial_sum(nu: usize, l: f64, weight: Weight, x: f64, big_m: usize, cfg: &BesselConfig) -> f64 {
    ordered_parallel_sum(1, big_m + 1, |m| {
        let z = l * m as f64;
        (regularized_term(nu, l, m, cfg) - (PI / z).sqrt()) * weight.at(m as f64 * x)
    })
}
