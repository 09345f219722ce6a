use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::{EvalResult, Method};
use crate::error::{Error, Result};
use crate::exact::bernoulli_number;

const EM_TERMS: usize = 12;

fn bernoulli_f64(n: usize) -> f64 {
    bernoulli_number(n).to_f64().expect("Bernoulli number representable")
}

/// Euler–Maclaurin evaluation of `sum_{k<N} (k+a)^{-s} + tail` with `K`
/// Bernoulli corrections. Valid for every real `s != 1`.
fn euler_maclaurin(s: f64, a: f64, n: usize, k_terms: usize) -> EvalResult {
    let mut head = crate::sum::Compensated::new();
    let mut mag = 0.0;
    for k in 0..n {
        let t = (k as f64 + a).powf(-s);
        head.add(t);
        mag += t;
    }
    let big = n as f64 + a;
    let integral = big.powf(1.0 - s) / (s - 1.0);
    mag += integral.abs() + big.powf(-s);
    let mut total = head.value() + integral + 0.5 * big.powf(-s);
    // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * big^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut last = 0.0;
    for j in 1..=k_terms {
        let term = bernoulli_f64(2 * j) / fact * rising * big.powf(-s - 2.0 * j as f64 + 1.0);
        total += term;
        mag += term.abs();
        last = term;
        let jj = 2.0 * j as f64;
        rising *= (s + jj - 1.0) * (s + jj);
        fact *= (jj + 1.0) * (jj + 2.0);
    }
    // for s < 0 the pieces grow with N and cancel, so rounding scales with `mag`
    EvalResult::new(total, last.abs() + 4.0 * f64::EPSILON * mag, Method::Series)
}

/// Hurwitz zeta `zeta(s, a)` for real `s != 1` and `a > 0`, continued
/// analytically for `s < 1`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<EvalResult> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    if s == 1.0 || !s.is_finite() {
        return Err(Error::Domain(format!("Hurwitz zeta undefined at s = {s}")));
    }
    let want = 12.0 + s.abs();
    let n = if a >= want { 0 } else { (want - a).ceil() as usize };
    Ok(euler_maclaurin(s, a, n, EM_TERMS))
}

/// `zeta(1/2, x)` for `0 < x <= 2`: 50 direct terms and Bernoulli
/// corrections through `B_6`.
pub fn hurwitz_zeta_half(x: f64) -> Result<EvalResult> {
    if !(x > 0.0 && x <= 2.0) {
        return Err(Error::Domain(format!("zeta(1/2, x) fast path needs 0 < x <= 2, got {x}")));
    }
    Ok(euler_maclaurin(0.5, x, 50, 3))
}

/// Riemann zeta for real `s != 1`; negative `s` goes through the
/// functional equation `zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)`.
pub fn riemann_zeta(s: f64) -> Result<EvalResult> {
    if s >= 0.0 || !s.is_finite() {
        return hurwitz_zeta(s, 1.0);
    }
    let half = 0.5 * s;
    if half.fract() == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, Method::Series));
    }
    let dual = hurwitz_zeta(1.0 - s, 1.0)?;
    let log_mag = s * 2f64.ln() + (s - 1.0) * PI.ln() + statrs::function::gamma::ln_gamma(1.0 - s);
    let trig = (PI * half).sin();
    let value = trig * log_mag.exp() * dual.value;
    let err = value.abs() * (8.0 * f64::EPSILON * (1.0 + s.abs())) + (log_mag.exp() * dual.abs_err);
    Ok(EvalResult::new(value, err, Method::Series))
}

/// `zeta(2n) = (-1)^{n+1} (2 pi)^{2n} B_{2n} / (2 (2n)!)`.
pub fn zeta_even(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("zeta_even needs n >= 1".into()));
    }
    // |B_{2n}| 2^{2n} / (2 (2n)!) exactly, then a single power of pi
    let mut r = bernoulli_number(2 * n).abs() * BigRational::from_integer(BigInt::from(2).pow(2 * n as u32 - 1));
    for k in 1..=2 * n {
        r /= BigRational::from_integer(BigInt::from(k));
    }
    Ok(r.to_f64().expect("finite") * PI.powi(2 * n as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_exponents_match_bernoulli_values() {
        // zeta(-k, a) = -B_{k+1}(a)/(k+1)
        let a: f64 = 0.3;
        let b2 = a * a - a + 1.0 / 6.0;
        let got = hurwitz_zeta(-1.0, a).unwrap().value;
        assert!((got + b2 / 2.0).abs() < 1e-13, "{got}");
    }

    #[test]
    fn zeta_two() {
        let z = riemann_zeta(2.0).unwrap().value;
        assert!((z - PI * PI / 6.0).abs() < 1e-14);
        assert!(hurwitz_zeta(1.0, 1.0).is_err());
        assert!(hurwitz_zeta_half(0.0).is_err());
    }
}
