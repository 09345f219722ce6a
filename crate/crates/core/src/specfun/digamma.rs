use crate::error::{Error, Result};

/// Euler's constant to 17 significant digits.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

/// Harmonic number `H_n = sum_{j=1}^n 1/j`, `H_0 = 0`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|j| 1.0 / j as f64).sum()
}

/// `psi(n) = -gamma + H_{n-1}` for integer `n >= 1`.
pub fn digamma_int(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("digamma has a pole at 0".into()));
    }
    Ok(-EULER_GAMMA + harmonic(n - 1))
}
