//! Zagier polynomials and modified Bernoulli numbers, computed two ways.
//!
//! The [`exact`] layer evaluates Bernoulli numbers, Bernoulli and Zagier
//! polynomials and Chebyshev polynomials in exact rational arithmetic. It is
//! the ground truth for everything else.
//!
//! The numeric layers evaluate the Bessel–Chebyshev representations of the
//! same quantities:
//!
//! - [`specfun`]: Bessel `J`/`Y` of integer and real order, the order
//!   derivative of `J`, Schläfli polynomials, the `P`/`Q` correction
//!   functions, Hurwitz zeta and the Coates oscillatory integral.
//! - [`series`]: accelerated evaluation of the slowly convergent
//!   Bessel–trigonometric series and the algebraic `g`-tails.
//! - [`formulas`]: right-hand sides of the exact formulas, the lemma-level
//!   identity checks, and [`formulas::EvalReport`] records comparing them with
//!   the exact values.
//!
//! Bernoulli numbers follow the generating function `z e^{xz} / (e^z - 1)`, so
//! `B_1 = -1/2`. The other sign convention silently breaks every identity
//! here.
//!
//! ```
//! use zagier_core::exact::{modified_bernoulli, zagier_eval};
//! use zagier_core::formulas::zagier_number_formula;
//! use zagier_core::series::SeriesConfig;
//! use num_rational::BigRational;
//!
//! assert_eq!(modified_bernoulli(2).to_string(), "1/24");
//! let half = BigRational::new(1.into(), 2.into());
//! assert_eq!(zagier_eval(2, &half).to_string(), "23/48");
//!
//! let report = zagier_number_formula(1, &SeriesConfig::with_tol(1e-10)).unwrap();
//! assert!(report.abs_error < 1e-8);
//! ```

pub mod error;
pub mod exact;
pub mod formulas;
pub mod quad;
pub mod series;
pub mod specfun;
pub mod sum;
pub mod verify;

pub use error::{Error, Result};
pub use num_rational::BigRational;
