//! Right-hand sides of the exact formulas for Zagier polynomials and
//! modified Bernoulli numbers, and numerical checks of the identities they
//! are built from. Each evaluator returns an [`EvalReport`] comparing the
//! numeric value with its reference.

mod converge;
mod lemmas;
mod report;
mod theorems;

pub use converge::{convergence_study, ConvergenceRow, ConvergenceSeries};
pub use lemmas::{
    a_function_two_ways, bernoulli_fourier_eval, fourier_coeff_dj_check, fourier_coeff_p_check,
    poisson_j_series_check, PoissonConfig,
};
pub use report::{EvalReport, Point};
pub use theorems::{
    even_asymptotic, odd_asymptotic, zagier_even_formula, zagier_number_formula, zagier_odd_formula,
    zagier_type_sum, zero_index_asymptotic,
};

/// `U_k(t)` by the three-term recurrence, stable for `|t| <= 1`.
pub(crate) fn cheb_u(k: usize, t: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * t);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn parity(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}
