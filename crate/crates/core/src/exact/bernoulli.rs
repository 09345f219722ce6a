use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{binomial, RationalPolynomial};
use crate::error::{Error, Result};

/// First line of an on-disk Bernoulli cache.
pub const CACHE_HEADER: &str = "zagier-kit bernoulli-cache v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheSource {
    Memory,
    Disk(PathBuf),
}

/// Append-only table of Bernoulli numbers `B_0, B_1, ...`.
///
/// Reads take a shared lock; extending the table takes the write lock, so
/// concurrent callers see either the old or the extended prefix and never a
/// partially written entry.
#[derive(Debug)]
pub struct BernoulliCache {
    values: RwLock<Vec<BigRational>>,
    source: CacheSource,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self {
            values: RwLock::new(Vec::new()),
            source: CacheSource::Memory,
        }
    }

    /// Process-wide cache used by [`bernoulli_number`].
    pub fn global() -> &'static BernoulliCache {
        static GLOBAL: OnceLock<BernoulliCache> = OnceLock::new();
        GLOBAL.get_or_init(BernoulliCache::new)
    }

    pub fn source(&self) -> &CacheSource {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("bernoulli cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `B_n`, extending the table through `n` if needed.
    pub fn get(&self, n: usize) -> BigRational {
        if let Some(b) = self.values.read().expect("bernoulli cache poisoned").get(n) {
            return b.clone();
        }
        let mut values = self.values.write().expect("bernoulli cache poisoned");
        extend_to(&mut values, n);
        values[n].clone()
    }

    /// `B_0..=B_n` as a fresh vector.
    pub fn prefix(&self, n: usize) -> Vec<BigRational> {
        self.get(n);
        self.values.read().expect("bernoulli cache poisoned")[..=n].to_vec()
    }

    /// Reads a cache file. Records must be contiguous from `n = 0`; the last
    /// record is checked against the defining recurrence.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let values = read_records(path)?;
        Ok(Self {
            values: RwLock::new(values),
            source: CacheSource::Disk(path.to_path_buf()),
        })
    }

    /// Appends the records of a cache file beyond the current length. Entries
    /// that overlap the current table must agree with it exactly.
    pub fn absorb(&self, path: impl AsRef<Path>) -> Result<usize> {
        let loaded = read_records(path.as_ref())?;
        let mut values = self.values.write().expect("bernoulli cache poisoned");
        for (n, (a, b)) in values.iter().zip(&loaded).enumerate() {
            if a != b {
                return Err(Error::Cache(format!("record {n} disagrees with computed value")));
            }
        }
        let added = loaded.len().saturating_sub(values.len());
        if added > 0 {
            let start = values.len();
            values.extend(loaded.into_iter().skip(start));
        }
        Ok(added)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let values = self.values.read().expect("bernoulli cache poisoned");
        let io = |e: std::io::Error| Error::Cache(e.to_string());
        let mut file = fs::File::create(path.as_ref()).map_err(io)?;
        writeln!(file, "{CACHE_HEADER}").map_err(io)?;
        for (n, b) in values.iter().enumerate() {
            writeln!(file, "{n}\t{}/{}", b.numer(), b.denom()).map_err(io)?;
        }
        Ok(())
    }

    /// Recomputes every stored entry from scratch and compares bit-exactly.
    pub fn verify(&self) -> bool {
        let values = self.values.read().expect("bernoulli cache poisoned");
        let mut fresh = Vec::new();
        if let Some(last) = values.len().checked_sub(1) {
            extend_to(&mut fresh, last);
        }
        *values == fresh
    }
}

fn read_records(path: &Path) -> Result<Vec<BigRational>> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    let reader = BufReader::new(fs::File::open(path).map_err(io)?);
    let mut lines = reader.lines();
    match lines.next() {
        Some(Ok(h)) if h.trim_end() == CACHE_HEADER => {}
        Some(Ok(h)) => return Err(Error::Cache(format!("unrecognised header {h:?}"))),
        Some(Err(e)) => return Err(io(e)),
        None => return Err(Error::Cache("empty cache file".into())),
    }
    let mut values = Vec::new();
    for line in lines {
        let line = line.map_err(io)?;
        if line.trim().is_empty() {
            continue;
        }
        let (idx, val) = line
            .split_once('\t')
            .ok_or_else(|| Error::Cache(format!("malformed record {line:?}")))?;
        let idx: usize = idx
            .parse()
            .map_err(|_| Error::Cache(format!("bad index in {line:?}")))?;
        if idx != values.len() {
            return Err(Error::Cache(format!("expected record {}, found {idx}", values.len())));
        }
        let b = BigRational::from_str(val.trim())
            .map_err(|_| Error::Cache(format!("bad rational in {line:?}")))?;
        values.push(b);
    }
    if let Some(last) = values.len().checked_sub(1) {
        if recurrence_residual(&values, last) != BigRational::zero() {
            return Err(Error::Cache(format!("record {last} fails the Bernoulli recurrence")));
        }
    }
    Ok(values)
}

/// `sum_{k<=n} C(n+1,k) B_k`, zero for every `n >= 1`. At `n = 0` returns `B_0 - 1`.
fn recurrence_residual(values: &[BigRational], n: usize) -> BigRational {
    if n == 0 {
        return &values[0] - BigRational::one();
    }
    (0..=n)
        .map(|k| &values[k] * BigRational::from_integer(binomial(n as u64 + 1, k as u64)))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn extend_to(values: &mut Vec<BigRational>, n: usize) {
    while values.len() <= n {
        let m = values.len();
        let next = if m == 0 {
            BigRational::one()
        } else if m > 1 && m % 2 == 1 {
            BigRational::zero()
        } else {
            // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
            let mut c = BigInt::one();
            let mut acc = BigRational::zero();
            for (k, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(c.clone());
                }
                c = c * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            -acc / BigRational::from_integer(BigInt::from(m + 1))
        };
        values.push(next);
    }
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> BigRational {
    BernoulliCache::global().get(n)
}

/// `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_polynomial(n: usize) -> RationalPolynomial {
    let b = BernoulliCache::global().prefix(n);
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (k, bk) in b.iter().enumerate() {
        coeffs[n - k] = bk * BigRational::from_integer(binomial(n as u64, k as u64));
    }
    RationalPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), ratio(1, 1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
        assert!(bernoulli_number(13).is_zero());
    }

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(bernoulli_polynomial(0).to_string(), "1");
        assert_eq!(bernoulli_polynomial(1).to_string(), "x - 1/2");
        assert_eq!(bernoulli_polynomial(2).to_string(), "x^2 - x + 1/6");
    }

    #[test]
    fn separate_caches_agree() {
        let local = BernoulliCache::new();
        assert_eq!(local.get(40), bernoulli_number(40));
        assert_eq!(local.len(), 41);
        assert!(local.verify());
    }

    #[test]
    fn disk_round_trip_and_rejection() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b.cache");
        let cache = BernoulliCache::new();
        cache.get(30);
        cache.save(&path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with(CACHE_HEADER));
        assert!(text.contains("\n1\t-1/2\n"));

        let loaded = BernoulliCache::load(&path).unwrap();
        assert_eq!(loaded.len(), 31);
        assert!(loaded.verify());
        assert_eq!(loaded.source(), &CacheSource::Disk(path.clone()));

        let tampered = text.replace("\n30\t", "\n30\t1");
        fs::write(&path, tampered).unwrap();
        assert!(BernoulliCache::load(&path).is_err());

        fs::write(&path, "zagier-kit bernoulli-cache v0\n").unwrap();
        assert!(matches!(BernoulliCache::load(&path), Err(Error::Cache(_))));
    }

    #[test]
    fn absorb_extends_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b.cache");
        let big = BernoulliCache::new();
        big.get(20);
        big.save(&path).unwrap();
        let small = BernoulliCache::new();
        small.get(4);
        assert_eq!(small.absorb(&path).unwrap(), 16);
        assert_eq!(small.len(), 21);
        assert!(small.verify());
    }
}
