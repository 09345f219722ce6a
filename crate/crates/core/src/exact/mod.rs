//! Exact rational arithmetic: the oracle layer.
//!
//! Every value here is a [`BigRational`] in lowest terms and every operation
//! is exact. Numeric formulas elsewhere in the crate are judged against these.

mod arith;
mod bernoulli;
mod chebyshev;
mod poly;
mod zagier;

pub use arith::{jacobi_symbol, odd_modified_closed_form, two_adic_valuation, two_adic_valuation_prediction};
pub use bernoulli::{bernoulli_number, bernoulli_polynomial, BernoulliCache, CACHE_HEADER};
pub use chebyshev::{chebyshev_t, chebyshev_u};
pub use poly::RationalPolynomial;
pub use zagier::{even_index_split, modified_bernoulli, zagier_eval, zagier_polynomial, zagier_shift};

use num_bigint::BigInt;
use num_rational::BigRational;

/// `p / q` as a reduced rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
