use super::SeriesResult;
use crate::error::{Error, Result};
use crate::sum::Compensated;

/// `G(T, r) = (T - sqrt(T^2 - 4))^{2r} / sqrt(T^2 - 4)` for `T > 2`, in the
/// conjugate form `(4 / (T + sqrt(T^2-4)))^{2r} / sqrt(T^2-4)`.
pub fn hyperbolic_g(t: f64, r: f64) -> f64 {
    g_excess(t - 2.0, r)
}

/// `G(2 + e, r)`, accurate for small `e > 0`.
fn g_excess(e: f64, r: f64) -> f64 {
    let d = (e * (e + 4.0)).sqrt();
    (4.0 / (e + 2.0 + d)).powf(2.0 * r) / d
}

/// `dG/dT` at `T = 2 + e`.
fn g_excess_prime(e: f64, r: f64) -> f64 {
    let dd = e * (e + 4.0);
    let d = dd.sqrt();
    let u = 4.0 / (e + 2.0 + d);
    -u.powf(2.0 * r) * (2.0 * r / dd + (e + 2.0) / (dd * d))
}

/// `g(y, r, x) = (y+1+x - sqrt((y-1+x)(y+3+x)))^{2r} / sqrt((y-1+x)(y+3+x))`.
pub fn g_term(y: f64, r: f64, x: f64) -> Result<f64> {
    let t = y + 1.0 + x;
    let d2 = (y - 1.0 + x) * (y + 3.0 + x);
    if !(d2 > 0.0) || !(r > 0.0) {
        return Err(Error::Domain(format!("g({y}, {r}, {x}) outside its domain")));
    }
    if t > 2.0 {
        return Ok(g_excess(y - 1.0 + x, r));
    }
    // t < -2: direct form, only meaningful for integer 2r
    let two_r = 2.0 * r;
    if two_r.fract() != 0.0 {
        return Err(Error::Domain(format!("g({y}, {r}, {x}) needs integer 2r for y+1+x < -2")));
    }
    let d = d2.sqrt();
    Ok((t - d).powi(two_r as i32) / d)
}

/// `sum_{m >= start} G(t0 + step m, r)` for `r > 0`, with `t0 + step start > 2`.
///
/// Terms are summed explicitly up to `M`, the rest by Euler–Maclaurin:
/// `int_M^inf f + f(M)/2 - f'(M)/12`, using the closed antiderivative
/// `int_T^inf G = u^{2r}/(2r)`, `u = T - sqrt(T^2-4)`. `M` doubles until the
/// next Euler–Maclaurin term is below `tol` or below the rounding level of the sum.
pub fn hyperbolic_sum(t0: f64, step: f64, start: usize, r: f64, tol: f64) -> Result<SeriesResult> {
    excess_sum(t0 + step * start as f64 - 2.0, step, start, r, tol)
}

/// As [`hyperbolic_sum`], with the first argument given as `2 + e0` so that
/// arguments just above 2 keep their precision.
fn excess_sum(e0: f64, step: f64, start: usize, r: f64, tol: f64) -> Result<SeriesResult> {
    if !(r > 0.0) || !(step > 0.0) || !(e0 > 0.0) {
        return Err(Error::Domain(format!(
            "hyperbolic sum needs r > 0, step > 0 and first argument > 2 (excess {e0}, step {step}, r {r})"
        )));
    }
    let e = |m: f64| e0 + step * (m - start as f64);
    let f = |m: f64| g_excess(e(m), r);
    let fp = |m: f64| step * g_excess_prime(e(m), r);
    let mut acc = Compensated::new();
    let mut next = start;
    let mut big_m = start + 16;
    loop {
        while next < big_m {
            acc.add(f(next as f64));
            next += 1;
        }
        let mf = big_m as f64;
        let em = e(mf);
        let u = 4.0 / (em + 2.0 + (em * (em + 4.0)).sqrt());
        let integral = u.powf(2.0 * r) / (2.0 * r * step);
        let tail = integral + 0.5 * f(mf) - fp(mf) / 12.0;
        let h = 0.25;
        let f3 = (fp(mf + h) - 2.0 * fp(mf) + fp(mf - h)) / (h * h);
        let truncation = 2.0 * f3.abs() / 720.0;
        let rounding = 4.0 * f64::EPSILON * (acc.value().abs() + tail.abs());
        let bound = truncation + rounding;
        if truncation < tol.max(rounding) || big_m > 1 << 24 {
            let value = acc.value() + tail;
            if truncation >= tol.max(rounding) {
                return Err(Error::NonConvergence { best: value, bound, terms: big_m - start, tol });
            }
            return Ok(SeriesResult { value, terms_used: big_m - start, tail_bound: bound, accelerated: true });
        }
        big_m = start + 2 * (big_m - start);
    }
}

/// `sum_{m >= start} g(m, r, x)` for `r >= 1/2`.
pub fn g_tail_sum(r: f64, x: f64, start: usize, tol: f64) -> Result<SeriesResult> {
    if r < 0.5 {
        return Err(Error::Domain(format!("g_tail_sum is defined for r >= 1/2, got {r}")));
    }
    if start == 0 {
        return Err(Error::Domain("g_tail_sum starts at m >= 1".into()));
    }
    // g(m, r, x) = G(2 + (m - 1 + x), r)
    excess_sum(x + (start - 1) as f64, 1.0, start, r, tol)
}

/// `sum_{m>=1} [m(m+2)]^{-1/2} [m+1+sqrt(m(m+2))]^{-1/2}`, which telescopes
/// to `(sqrt 2 + 1)/2`.
pub fn telescope_sum(tol: f64) -> Result<SeriesResult> {
    let s = hyperbolic_sum(2.0, 2.0, 1, 0.25, tol / std::f64::consts::SQRT_2)?;
    Ok(SeriesResult { value: std::f64::consts::SQRT_2 * s.value, ..s })
}
