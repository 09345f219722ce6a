//! Double-precision special functions.
//!
//! Every evaluator returns an [`EvalResult`] carrying a heuristic absolute
//! error estimate and the method that produced the value.

mod bessel;
mod coates;
mod digamma;
mod hankel;
mod order_deriv;
mod schlafli;
mod zeta;

pub use bessel::{
    bessel_j, bessel_j_int_batch, bessel_y_int, bessel_y_int_with, BesselConfig,
};
pub use coates::{coates_integral, coates_integral_with, coates_ode_residual, coates_series, CoatesConfig};
pub use digamma::{digamma_int, euler_gamma, harmonic, EULER_GAMMA};
pub(crate) use hankel::hankel_jy;
pub use hankel::{hankel_coefficients, hankel_pq, HankelPQ};
pub use order_deriv::dj_dnu_at_int;
pub use schlafli::{p_func, pq_both, q_func, schlafli_s, PQPair};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_half, riemann_zeta, zeta_even};

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    Recurrence,
    Asymptotic,
    Quadrature,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err: f64,
    pub method: Method,
}

impl EvalResult {
    pub(crate) fn new(value: f64, abs_err: f64, method: Method) -> Self {
        Self { value, abs_err: abs_err.abs(), method }
    }
}
