use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::SeriesResult;

/// An evaluation point, either an exact rational or a double.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Rational(BigRational),
    Float(f64),
}

impl Point {
    pub fn value(&self) -> f64 {
        match self {
            Point::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            Point::Float(v) => *v,
        }
    }

    /// The exact rational value. A double maps to its exact binary value.
    pub fn rational(&self) -> Result<BigRational> {
        match self {
            Point::Rational(q) => Ok(q.clone()),
            Point::Float(v) => {
                BigRational::from_float(*v).ok_or_else(|| Error::Domain(format!("{v} is not finite")))
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Point::Rational(_))
    }

    /// A double within `1e-12` of `p/q` with `q <= 64` becomes that rational.
    pub fn snap(self) -> (Point, bool) {
        let Point::Float(v) = self else {
            return (self, false);
        };
        for q in 1..=64i64 {
            let p = (v * q as f64).round();
            if (v - p / q as f64).abs() <= 1e-12 && p.abs() < 1e15 {
                let r = BigRational::new(BigInt::from(p as i64), BigInt::from(q));
                return (Point::Rational(r), true);
            }
        }
        (Point::Float(v), false)
    }
}

impl From<f64> for Point {
    fn from(v: f64) -> Self {
        Point::Float(v)
    }
}

impl From<BigRational> for Point {
    fn from(q: BigRational) -> Self {
        Point::Rational(q)
    }
}

impl From<(i64, i64)> for Point {
    fn from((p, q): (i64, i64)) -> Self {
        Point::Rational(BigRational::new(p.into(), q.into()))
    }
}

impl FromStr for Point {
    type Err = Error;

    /// `"p/q"` and plain integers parse as rationals, anything else as a double.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(p) = s.parse::<BigInt>() {
            return Ok(Point::Rational(BigRational::from_integer(p)));
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Domain(format!("bad numerator in {s:?}")))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Domain(format!("bad denominator in {s:?}")))?;
            if q.is_zero() {
                return Err(Error::Domain(format!("zero denominator in {s:?}")));
            }
            return Ok(Point::Rational(BigRational::new(p, q)));
        }
        s.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(Point::Float)
            .ok_or_else(|| Error::Domain(format!("cannot parse {s:?} as a number")))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Rational(q) => write!(f, "{q}"),
            Point::Float(v) => write!(f, "{v}"),
        }
    }
}

/// One numeric evaluation compared with its reference value.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport {
    /// Which formula or check produced the report.
    pub label: &'static str,
    pub n: usize,
    pub x: Option<Point>,
    /// Exact value of the quantity, when one exists.
    pub exact: Option<BigRational>,
    /// What `formula_value` is compared with: `exact` rounded to a double,
    /// or an independently computed value.
    pub reference: f64,
    pub formula_value: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub series_meta: Vec<SeriesResult>,
}

impl EvalReport {
    pub(crate) fn against_exact(
        label: &'static str,
        n: usize,
        x: Option<Point>,
        exact: BigRational,
        value: f64,
        series_meta: Vec<SeriesResult>,
    ) -> Self {
        let reference = exact.to_f64().unwrap_or(f64::NAN);
        let mut r = Self::against(label, n, x, reference, value, series_meta);
        r.exact = Some(exact);
        r
    }

    pub(crate) fn against(
        label: &'static str,
        n: usize,
        x: Option<Point>,
        reference: f64,
        value: f64,
        series_meta: Vec<SeriesResult>,
    ) -> Self {
        let abs_error = (value - reference).abs();
        let rel_error = if reference != 0.0 { abs_error / reference.abs() } else { abs_error };
        Self { label, n, x, exact: None, reference, formula_value: value, abs_error, rel_error, series_meta }
    }

    /// Total explicit series terms over every sum in the report.
    pub fn terms_used(&self) -> usize {
        self.series_meta.iter().map(|s| s.terms_used).sum()
    }

    pub fn tail_bound(&self) -> f64 {
        self.series_meta.iter().map(|s| s.tail_bound).sum()
    }
}
