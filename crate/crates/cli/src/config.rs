//! Job configuration: flags, an optional TOML file and the cache
//! environment variable.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use hairycalc::engine::{ComplexKind, GridSpec, Truncation};
use hairycalc::linalg::RankOptions;
use hairycalc::Params;
use serde::{Deserialize, Serialize};

pub const CACHE_ENV: &str = "HAIRYCALC_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexArg {
    Hairy,
    Koszul,
    KoszulFull,
    All,
}

/// Grid flags shared by `homology` and `check`.
#[derive(Args, Debug, Clone, Default)]
pub struct JobArgs {
    /// Component dimensions, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<i64>>,
    /// Ambient dimension.
    #[arg(long)]
    pub d: Option<i64>,
    /// Largest total number of hairs.
    #[arg(long)]
    pub max_hairs: Option<usize>,
    /// Largest complexity.
    #[arg(long)]
    pub max_complexity: Option<usize>,
    /// Complexes to compute.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub complex: Option<Vec<ComplexArg>>,
    #[arg(long, allow_negative_numbers = true)]
    pub degree_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub degree_max: Option<i64>,
    /// Keep Koszul generators with at most this many vertices.
    #[arg(long, conflicts_with = "truncate_multi")]
    pub truncate: Option<usize>,
    /// Per-color vertex bounds for the Koszul complexes.
    #[arg(long, value_delimiter = ',')]
    pub truncate_multi: Option<Vec<usize>>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Double-check every rank modulo two primes.
    #[arg(long)]
    pub verify_modular: bool,
    /// TOML file with a `[job]` table; flags win over it.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileJob {
    m: Option<Vec<i64>>,
    d: Option<i64>,
    max_hairs: Option<usize>,
    max_complexity: Option<usize>,
    complex: Option<Vec<ComplexArg>>,
    degree_min: Option<i64>,
    degree_max: Option<i64>,
    truncate: Option<usize>,
    truncate_multi: Option<Vec<usize>>,
    workers: Option<usize>,
    cache_dir: Option<PathBuf>,
    format: Option<Format>,
    verify_modular: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(default)]
    job: FileJob,
}

/// A fully resolved job.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JobConfig {
    pub m: Vec<i64>,
    pub d: i64,
    pub max_hairs: usize,
    pub max_complexity: usize,
    pub complex: Vec<ComplexKind>,
    pub degree_window: Option<(i64, i64)>,
    pub truncation: Option<Truncation>,
    #[serde(skip)]
    pub workers: usize,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub format: Format,
    pub verify_modular: bool,
}

impl JobConfig {
    pub fn params(&self) -> Result<Params, String> {
        Params::new(self.m.clone(), self.d).map_err(|e| e.to_string())
    }

    pub fn grid(&self) -> Result<GridSpec, String> {
        let mut spec = GridSpec::new(self.params()?, self.max_hairs, self.max_complexity, self.complex.clone());
        spec.degree_window = self.degree_window;
        spec.truncation = self.truncation.clone();
        Ok(spec)
    }

    pub fn rank_options(&self) -> RankOptions {
        RankOptions { verify_modular: self.verify_modular, seed: None }
    }
}

fn read_file(path: &Path) -> Result<FileJob, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let parsed: FileConfig =
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))?;
    Ok(parsed.job)
}

fn kinds(args: &[ComplexArg]) -> Vec<ComplexKind> {
    let mut out = Vec::new();
    for a in args {
        let add: &[ComplexKind] = match a {
            ComplexArg::Hairy => &[ComplexKind::HairyPi],
            ComplexArg::Koszul => &[ComplexKind::KoszulPi],
            ComplexArg::KoszulFull => &[ComplexKind::KoszulFull],
            ComplexArg::All => &[ComplexKind::HairyPi, ComplexKind::KoszulPi, ComplexKind::KoszulFull],
        };
        for k in add {
            if !out.contains(k) {
                out.push(*k);
            }
        }
    }
    out.sort();
    out
}

/// Merges flags over the config file; the cache directory falls back to
/// the environment before the file.
pub fn resolve(args: &JobArgs, env_cache: Option<PathBuf>) -> Result<JobConfig, String> {
    let file = match &args.config {
        Some(p) => read_file(p)?,
        None => FileJob::default(),
    };
    let m = args.m.clone().or(file.m).ok_or("missing --m")?;
    let d = args.d.or(file.d).ok_or("missing --d")?;
    let max_hairs = args.max_hairs.or(file.max_hairs).ok_or("missing --max-hairs")?;
    let max_complexity = args.max_complexity.or(file.max_complexity).ok_or("missing --max-complexity")?;
    let complex = kinds(&args.complex.clone().or(file.complex).unwrap_or(vec![ComplexArg::Hairy]));
    let degree_window = match (args.degree_min.or(file.degree_min), args.degree_max.or(file.degree_max)) {
        (None, None) => None,
        (Some(lo), Some(hi)) if lo <= hi => Some((lo, hi)),
        (Some(lo), Some(hi)) => return Err(format!("empty degree window [{lo}, {hi}]")),
        _ => return Err("--degree-min and --degree-max must be given together".into()),
    };
    let truncation = if args.truncate.is_some() || args.truncate_multi.is_some() {
        match (args.truncate, &args.truncate_multi) {
            (Some(n), _) => Some(Truncation::Total(n)),
            (None, Some(ns)) => Some(Truncation::PerColor(ns.clone())),
            _ => None,
        }
    } else {
        match (file.truncate, file.truncate_multi) {
            (Some(_), Some(_)) => return Err("config sets both truncate and truncate_multi".into()),
            (Some(n), None) => Some(Truncation::Total(n)),
            (None, Some(ns)) => Some(Truncation::PerColor(ns)),
            (None, None) => None,
        }
    };
    if let Some(Truncation::PerColor(ns)) = &truncation {
        if ns.len() != m.len() {
            return Err(format!("--truncate-multi has {} entries for {} components", ns.len(), m.len()));
        }
    }
    let workers = args.workers.or(file.workers).unwrap_or(1);
    if workers == 0 {
        return Err("--workers must be at least 1".into());
    }
    let cfg = JobConfig {
        m,
        d,
        max_hairs,
        max_complexity,
        complex,
        degree_window,
        truncation,
        workers,
        cache_dir: args.cache_dir.clone().or(env_cache).or(file.cache_dir),
        format: args.format.or(file.format).unwrap_or(Format::Json),
        verify_modular: args.verify_modular || file.verify_modular.unwrap_or(false),
    };
    cfg.params()?;
    Ok(cfg)
}
