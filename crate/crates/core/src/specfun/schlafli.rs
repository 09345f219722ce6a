use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bessel::bessel_j_int_full;
use super::{harmonic, EvalResult, Method};
use crate::error::{Error, Result};

/// Schläfli polynomial `S_n(z) = sum_{r=0}^{floor((n-1)/2)} (n-r-1)!/r! (z/2)^{2r-n}`,
/// `S_0 = 0`.
pub fn schlafli_s(n: usize, z: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let h = 0.5 * z;
    // (n-1)! (z/2)^{-n}, built up without overflow
    let mut t = 1.0 / h;
    for k in 1..n {
        t *= k as f64 / h;
    }
    let mut sum = t;
    for r in 0..(n - 1) / 2 {
        t *= h * h / (((n - r - 1) * (r + 1)) as f64);
        sum += t;
    }
    sum
}

/// Both representations of `P_n(z)` and `Q_n(z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PQPair {
    pub p_bessel: f64,
    pub q_bessel: f64,
    pub p_digamma: f64,
    pub q_digamma: f64,
}

fn check(n: usize, z: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("P_n, Q_n need n >= 1".into()));
    }
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::Domain(format!("P_n, Q_n need z > 0, got {z}")));
    }
    Ok(())
}

/// `J_m` for signed `m`, with `J_{-m} = (-1)^m J_m`.
fn j_signed(j: &[f64], m: i64) -> f64 {
    let a = m.unsigned_abs() as usize;
    let v = j.get(a).copied().unwrap_or(0.0);
    if m < 0 && a % 2 == 1 {
        -v
    } else {
        v
    }
}

fn pq_bessel(n: usize, z: f64) -> (f64, f64, f64) {
    let j = bessel_j_int_full(n, z);
    let ni = n as i64;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut abs = 0.0;
    let mut k = 1usize;
    loop {
        let ki = k as i64;
        let hi = (n + 2 * k) as i64;
        if hi as usize >= j.len() && (2 * ki - ni) as usize >= j.len() {
            break;
        }
        let kf = k as f64;
        let dp = (j_signed(&j, ni + 2 * ki) - j_signed(&j, ni - 2 * ki)) / kf;
        let mut dq = (n as f64 + 2.0 * kf) / (kf * (n as f64 + kf)) * j_signed(&j, hi);
        if k % 2 == 1 {
            dq = -dq;
        }
        p += dp;
        q += dq;
        abs += dp.abs() + dq.abs();
        k += 1;
    }
    q += j[n] * harmonic(n);
    (p, q, 16.0 * f64::EPSILON * (abs + j[n].abs() * harmonic(n)))
}

/// `P_n(z) = sum_{k>=1} (J_{n+2k}(z) - J_{n-2k}(z)) / k`.
pub fn p_func(n: usize, z: f64) -> Result<EvalResult> {
    check(n, z)?;
    let (p, _, err) = pq_bessel(n, z);
    Ok(EvalResult::new(p, err, Method::Series))
}

/// `Q_n(z) = H_n J_n(z) + sum_{k>=1} (-1)^k (n+2k)/(k(n+k)) J_{n+2k}(z)`.
pub fn q_func(n: usize, z: f64) -> Result<EvalResult> {
    check(n, z)?;
    let (_, q, err) = pq_bessel(n, z);
    Ok(EvalResult::new(q, err, Method::Series))
}

fn exact_harmonic(n: usize) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, j| acc + BigRational::new(BigInt::one(), BigInt::from(j)))
}

/// The digamma-series forms of `P_n`, `Q_n`, summed in exact rational
/// arithmetic at the binary value of `z`. The power series cancel by many
/// orders of magnitude at `z` of a few tens, so floating point is useless
/// here; the digamma differences are harmonic numbers and stay rational.
fn pq_digamma(n: usize, z: f64) -> (f64, f64) {
    let h = BigRational::from_float(0.5 * z).expect("finite z");
    let h2 = &h * &h;
    // -sum_{r=ceil(n/2)}^{n-1} (n-r-1)!/r! h^{2r-n}
    let mut poly = BigRational::zero();
    for r in n.div_ceil(2)..n {
        let num: BigInt = (1..=(n - r - 1)).map(BigInt::from).product();
        let den: BigInt = (1..=r).map(BigInt::from).product();
        let e = 2 * r as i32 - n as i32;
        poly += BigRational::new(num, den) * pow_signed(&h, e);
    }
    // h^{n+2l} / (l! (n+l)!), updated in place
    let mut t = pow_signed(&h, n as i32) / BigRational::from_integer((1..=n).map(BigInt::from).product());
    let mut hl = BigRational::zero();
    let mut hnl = exact_harmonic(n);
    let mut ps = BigRational::zero();
    let mut qs = BigRational::zero();
    let tiny = BigRational::new(BigInt::one(), BigInt::from(10).pow(40));
    let mut l = 0usize;
    loop {
        let signed = if l % 2 == 0 { t.clone() } else { -t.clone() };
        ps += &signed * (&hnl - &hl);
        qs += &signed * &hnl;
        let lf = BigRational::from_integer(BigInt::from(l + 1));
        let nlf = BigRational::from_integer(BigInt::from(n + l + 1));
        t = t * &h2 / (&lf * &nlf);
        hl += BigRational::one() / &lf;
        hnl += BigRational::one() / &nlf;
        l += 1;
        if BigRational::from_integer(BigInt::from(l)) > h && (&t * &hnl).abs() < tiny {
            break;
        }
    }
    let p = -poly + ps;
    (p.to_f64().unwrap_or(f64::NAN), qs.to_f64().unwrap_or(f64::NAN))
}

fn pow_signed(h: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(h.clone(), e as usize)
    } else {
        num_traits::pow(h.recip(), (-e) as usize)
    }
}

/// Both forms of `P_n(z)`, `Q_n(z)` for cross-checking.
pub fn pq_both(n: usize, z: f64) -> Result<PQPair> {
    check(n, z)?;
    let (p_bessel, q_bessel, _) = pq_bessel(n, z);
    let (p_digamma, q_digamma) = pq_digamma(n, z);
    Ok(PQPair { p_bessel, q_bessel, p_digamma, q_digamma })
}
