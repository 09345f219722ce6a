use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ratio;
use crate::error::{Error, Result};

/// Jacobi symbol `(a / n)` for odd `n >= 1`, via quadratic reciprocity.
pub fn jacobi_symbol(a: i64, n: i64) -> Result<i8> {
    if n <= 0 || n % 2 == 0 {
        return Err(Error::Domain(format!("jacobi symbol needs odd positive n, got {n}")));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// Exponent of 2 in `v`, or `None` for zero.
pub fn two_adic_valuation(v: &BigInt) -> Option<u64> {
    if v.is_zero() {
        None
    } else {
        v.trailing_zeros()
    }
}

/// Predicted exponent of 2 in the reduced denominator of `B*_n`.
pub fn two_adic_valuation_prediction(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let correction = match n % 12 {
        6 => 1,
        0 => 2,
        _ => 0,
    };
    Ok(2 + n.trailing_zeros() as i64 - correction)
}

/// `B*_{2n+1}` from the Jacobi-symbol closed form.
pub fn odd_modified_closed_form(n: u64) -> BigRational {
    let m = 2 * n as i64 + 1;
    let j4 = jacobi_symbol(-4, m).expect("2n+1 is odd and positive") as i64;
    let j3 = jacobi_symbol(-3, m).expect("2n+1 is odd and positive") as i64;
    ratio(j4, 4) + ratio(j3, 2)
}
