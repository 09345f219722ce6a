//! Compensated summation and a deterministic parallel reduction.

use rayon::prelude::*;

/// Neumaier's variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for Compensated {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Compensated::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of a slice in index order.
pub fn compensated_sum(values: &[f64]) -> f64 {
    values.iter().copied().collect::<Compensated>().value()
}

/// Fixed chunk width for [`ordered_parallel_sum`]. Chunk boundaries depend only
/// on the index range, never on the thread count.
pub const CHUNK: usize = 256;

/// `sum_{i in lo..hi} f(i)` with terms generated in parallel. Each fixed-size
/// chunk is summed in ascending order, and chunk sums are combined in
/// ascending order, so the result is bit-identical for any pool size.
pub fn ordered_parallel_sum<F>(lo: usize, hi: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    if hi <= lo {
        return 0.0;
    }
    let n_chunks = (hi - lo).div_ceil(CHUNK);
    let partials: Vec<(f64, f64)> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let start = lo + c * CHUNK;
            let end = (start + CHUNK).min(hi);
            let acc: Compensated = (start..end).map(&f).collect();
            (acc.sum, acc.comp)
        })
        .collect();
    let mut total = Compensated::new();
    for (s, c) in partials {
        total.add(s);
        total.add(c);
    }
    total.value()
}
