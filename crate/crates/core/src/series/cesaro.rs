use rayon::prelude::*;

use crate::sum::Compensated;

/// Mean of the last `window` partial sums of `sum_{m=1}^{total} term(m)`.
///
/// A slow (C,1) estimate for conditionally convergent series, used only
/// as an independent check on the accelerated evaluators.
pub fn cesaro_tail_mean<F>(term: F, total: usize, window: usize) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let window = window.clamp(1, total.max(1));
    let terms: Vec<f64> = (1..=total).into_par_iter().map(&term).collect();
    let mut partial = Compensated::new();
    let mut mean = Compensated::new();
    for (i, t) in terms.iter().enumerate() {
        partial.add(*t);
        if i + window >= total {
            mean.add(partial.value());
        }
    }
    mean.value() / window as f64
}
