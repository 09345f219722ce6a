use thiserror::Error;

/// Errors raised by the numeric and exact layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("x = {x} lies outside the evaluation window [{lo}, {hi}]")]
    OutsideWindow { x: f64, lo: f64, hi: f64 },

    /// The requested tolerance was not reached within the term budget. `best`
    /// is the value obtained with the largest admissible truncation.
    #[error("series did not reach tolerance {tol:e} within {terms} terms (best value {best}, bound {bound:e})")]
    NonConvergence {
        best: f64,
        bound: f64,
        terms: usize,
        tol: f64,
    },

    #[error("quadrature exceeded {limit} panels (estimate {estimate}, error {error:e})")]
    Quadrature {
        estimate: f64,
        error: f64,
        limit: usize,
    },

    #[error("bernoulli cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
