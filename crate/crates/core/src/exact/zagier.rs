use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{bernoulli_number, bernoulli_polynomial, binomial, chebyshev_u, ratio, RationalPolynomial};

fn weight(n: usize, r: usize) -> BigRational {
    BigRational::new(binomial((n + r) as u64, (2 * r) as u64), BigInt::from(n + r))
}

/// Modified Bernoulli number `B*_n = sum_{r=0}^n C(n+r,2r) B_r / (n+r)`.
///
/// # Panics
/// If `n == 0`.
pub fn modified_bernoulli(n: usize) -> BigRational {
    assert!(n >= 1, "modified Bernoulli numbers start at n = 1");
    (0..=n)
        .map(|r| weight(n, r) * bernoulli_number(r))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Zagier polynomial `B*_n(x) = sum_{r=0}^n C(n+r,2r) B_r(x) / (n+r)`.
///
/// # Panics
/// If `n == 0`.
pub fn zagier_polynomial(n: usize) -> RationalPolynomial {
    assert!(n >= 1, "Zagier polynomials start at n = 1");
    (0..=n).fold(RationalPolynomial::zero(), |acc, r| {
        &acc + &bernoulli_polynomial(r).scale(&weight(n, r))
    })
}

/// `B*_n(x)` from the defining double sum, without building the polynomial.
///
/// # Panics
/// If `n == 0`.
pub fn zagier_eval(n: usize, x: &BigRational) -> BigRational {
    assert!(n >= 1, "Zagier polynomials start at n = 1");
    let mut powers = vec![BigRational::one()];
    for k in 1..=n {
        let next = &powers[k - 1] * x;
        powers.push(next);
    }
    let mut total = BigRational::zero();
    for r in 0..=n {
        let br: BigRational = (0..=r)
            .map(|k| {
                bernoulli_number(k)
                    * BigRational::from_integer(binomial(r as u64, k as u64))
                    * &powers[r - k]
            })
            .fold(BigRational::zero(), |a, b| a + b);
        total += weight(n, r) * br;
    }
    total
}

/// `B*_n(x + k)` obtained from `B*_n(x)` by telescoping
/// `B*_n(y + 1) - B*_n(y) = U_{n-1}(y/2 + 1) / 2`.
pub fn zagier_shift(n: usize, x: &BigRational, k: i64) -> BigRational {
    let base = zagier_eval(n, x);
    let u = chebyshev_u(n - 1);
    let half = ratio(1, 2);
    let step = |y: BigRational| u.eval(&(y * &half + BigRational::one()));
    let mut acc = BigRational::zero();
    if k >= 0 {
        for j in 1..=k {
            acc += step(x + ratio(j - 1, 1));
        }
        base + acc * &half
    } else {
        for j in 1..=(-k) {
            acc += step(x + ratio(k + j - 1, 1));
        }
        base - acc * &half
    }
}

/// The even-index decomposition of `2 B*_{2n}(x)`:
/// `sum_{r=0}^n (-1)^{n+r} C(n+r,2r) B_{2r}(x)/(n+r) + U_{2n-1}(x/2) + U_{2n-1}((x+1)/2)`.
///
/// Only even-index Bernoulli polynomials appear on the right.
pub fn even_index_split(n: usize) -> RationalPolynomial {
    assert!(n >= 1, "even_index_split needs n >= 1");
    let mut acc = RationalPolynomial::zero();
    for r in 0..=n {
        let mut w = weight(n, r);
        if (n + r) % 2 == 1 {
            w = -w;
        }
        acc = &acc + &bernoulli_polynomial(2 * r).scale(&w);
    }
    let u = chebyshev_u(2 * n - 1);
    let half = ratio(1, 2);
    let a = u.compose_affine(&half, &BigRational::zero());
    let b = u.compose_affine(&half, &half);
    &(&acc + &a) + &b
}
