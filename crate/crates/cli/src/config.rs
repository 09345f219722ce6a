use std::fs;
use std::path::{Path, PathBuf};

use zagier_core::series::SeriesConfig;

use crate::args::{Format, GlobalArgs};

/// Settings shared by every subcommand. Sources are applied in order:
/// built-in defaults, the config file, `ZAGIER_CACHE`, then flags.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub tol: f64,
    pub max_terms: usize,
    pub format: Format,
    pub cache_path: Option<PathBuf>,
    pub x_window: (f64, f64),
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let series = SeriesConfig::default();
        Self {
            tol: series.tol,
            max_terms: series.max_terms,
            format: Format::Text,
            cache_path: None,
            x_window: series.window,
            threads: 0,
        }
    }
}

impl RunConfig {
    pub fn resolve(args: &GlobalArgs, env_cache: Option<String>) -> Result<Self, String> {
        let mut cfg = Self::default();
        if let Some(path) = &args.config {
            cfg.apply_file(path)?;
        }
        if let Some(p) = env_cache.filter(|p| !p.is_empty()) {
            cfg.cache_path = Some(PathBuf::from(p));
        }
        if let Some(t) = args.tol {
            cfg.tol = t;
        }
        if let Some(m) = args.max_terms {
            cfg.max_terms = m;
        }
        if let Some(f) = args.format {
            cfg.format = f;
        }
        if let Some(c) = &args.cache {
            cfg.cache_path = Some(c.clone());
        }
        if let Some(w) = &args.x_window {
            cfg.x_window = parse_window(w)?;
        }
        if let Some(t) = args.threads {
            cfg.threads = t;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected `key = value`", path.display(), i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| format!("{}:{}: bad {what} {value:?}", path.display(), i + 1);
            match key.replace('-', "_").as_str() {
                "tol" => self.tol = value.parse().map_err(|_| bad("tol"))?,
                "max_terms" => self.max_terms = value.parse().map_err(|_| bad("max_terms"))?,
                "format" => {
                    self.format = match value {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        "text" => Format::Text,
                        _ => return Err(bad("format")),
                    }
                }
                "cache" | "cache_path" => self.cache_path = Some(PathBuf::from(value)),
                "x_window" => self.x_window = parse_window(value)?,
                "threads" => self.threads = value.parse().map_err(|_| bad("threads"))?,
                other => return Err(format!("{}:{}: unknown key {other:?}", path.display(), i + 1)),
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), String> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(format!("tol must lie in (0, 1), got {}", self.tol));
        }
        if self.max_terms == 0 {
            return Err("max-terms must be positive".into());
        }
        let (lo, hi) = self.x_window;
        if !(lo > 0.0 && lo < hi && hi < 1.0) {
            return Err(format!("x-window must satisfy 0 < lo < hi < 1, got ({lo}, {hi})"));
        }
        Ok(())
    }

    pub fn series(&self) -> SeriesConfig {
        SeriesConfig { tol: self.tol, max_terms: self.max_terms, window: self.x_window, ..SeriesConfig::default() }
    }
}

fn parse_window(s: &str) -> Result<(f64, f64), String> {
    let bad = || format!("x-window must be `lo,hi`, got {s:?}");
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}
