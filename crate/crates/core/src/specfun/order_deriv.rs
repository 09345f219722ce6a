use super::bessel::bessel_j_int_full;
use super::{digamma_int, EvalResult, Method};
use crate::error::{Error, Result};

/// `dJ_nu(z)/dnu` at integer `nu = n`:
/// `(log(z/2) - psi(n+1)) J_n(z) - sum_{k>=1} (-1)^k (2k+n)/(k(k+n)) J_{2k+n}(z)`.
pub fn dj_dnu_at_int(n: usize, z: f64) -> Result<EvalResult> {
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::Domain(format!("dJ/dnu needs z > 0, got {z}")));
    }
    let j = bessel_j_int_full(n, z);
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut k = 1;
    while n + 2 * k < j.len() {
        let kf = k as f64;
        let t = (2.0 * kf + n as f64) / (kf * (kf + n as f64)) * j[n + 2 * k];
        let t = if k % 2 == 0 { t } else { -t };
        sum += t;
        abs_sum += t.abs();
        if (n + 2 * k) as f64 > z && t.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        k += 1;
    }
    let lead = (0.5 * z).ln() - digamma_int(n + 1)?;
    let value = lead * j[n] - sum;
    let err = 16.0 * f64::EPSILON * (lead.abs() * j[n].abs() + abs_sum);
    Ok(EvalResult::new(value, err, Method::Series))
}
