//! The `check` command: every consistency test on one grid.

use std::collections::BTreeMap;

use hairycalc::engine::{
    block_homology, build_block, compare, genus_degree_sweep, hair_vectors, hairy_degree_zero_dim,
    BlockHomology, BlockKey, BuildOptions, ComplexKind,
};
use hairycalc::oracles::{tree_homology_oracle, whitehead_kernel_dim};
use hairycalc::{Error, Params, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::JobConfig;
use crate::store::BlockStore;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub items: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult { name, status: Status::Pass, items: 0, failures: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        self.status = Status::Fail;
        self.failures.push(msg);
    }

    fn skipped(name: &'static str) -> Self {
        CheckResult { name, status: Status::Skipped, items: 0, failures: Vec::new() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub params: Params,
    pub codimension: i64,
    pub below_theorem_range: bool,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl CheckReport {
    pub fn first_failure(&self) -> Option<String> {
        self.checks
            .iter()
            .find(|c| c.status == Status::Fail)
            .map(|c| format!("{}: {}", c.name, c.failures.first().cloned().unwrap_or_default()))
    }
}

struct Built {
    key: BlockKey,
    outcome: std::result::Result<BlockHomology, String>,
    cache_problem: Option<String>,
}

fn build_one(key: &BlockKey, cfg: &JobConfig, store: Option<&BlockStore>) -> Result<Built> {
    let opts = BuildOptions::default();
    let block = match build_block(key, &opts) {
        Ok(b) => b,
        Err(Error::Inconsistency(msg)) => {
            return Ok(Built { key: key.clone(), outcome: Err(msg), cache_problem: None })
        }
        Err(e) => return Err(e),
    };
    let mut cache_problem = None;
    if let Some(store) = store {
        match store.load(key, &opts) {
            Ok(Some(cached)) => {
                if cached.complex != block.complex || cached.zero_discarded != block.zero_discarded {
                    cache_problem = Some(format!("{key}: cached block differs from recomputation"));
                }
            }
            Ok(None) => {}
            Err(e) => cache_problem = Some(format!("{key}: {e}")),
        }
    }
    let outcome = match block_homology(&block, &cfg.rank_options()) {
        Ok(h) => Ok(h),
        Err(Error::Inconsistency(msg)) => Err(msg),
        Err(e) => return Err(e),
    };
    Ok(Built { key: key.clone(), outcome, cache_problem })
}

pub fn run_checks(cfg: &JobConfig, store: Option<&BlockStore>) -> Result<CheckReport> {
    let params = cfg.params().map_err(Error::InvalidInput)?;
    let in_range = params.in_theorem_range();
    let mut keys = Vec::new();
    for s in hair_vectors(params.r(), cfg.max_hairs) {
        for t in 0..=cfg.max_complexity {
            for kind in [ComplexKind::HairyPi, ComplexKind::KoszulPi] {
                keys.push(BlockKey::new(params.clone(), s.clone(), t, kind)?);
            }
        }
    }
    let built = keys.par_iter().map(|k| build_one(k, cfg, store)).collect::<Result<Vec<_>>>()?;

    let mut square = CheckResult::new("square-zero");
    let mut euler = CheckResult::new("euler");
    let mut cache = CheckResult::new("cache");
    let mut homology: BTreeMap<(Vec<usize>, usize, ComplexKind), BlockHomology> = BTreeMap::new();
    for b in built {
        square.items += 1;
        euler.items += 1;
        if let Some(p) = b.cache_problem {
            cache.fail(p);
        }
        if store.is_some() {
            cache.items += 1;
        }
        match b.outcome {
            Ok(h) => {
                homology.insert((b.key.s.clone(), b.key.t, b.key.kind), h);
            }
            Err(msg) if msg.contains("Euler") => euler.fail(format!("{}: {msg}", b.key)),
            Err(msg) => square.fail(format!("{}: {msg}", b.key)),
        }
    }
    if store.is_none() {
        cache = CheckResult::skipped("cache");
    }

    let mut duality = CheckResult::new("hairy-vs-koszul");
    for s in hair_vectors(params.r(), cfg.max_hairs) {
        for t in 0..=cfg.max_complexity {
            let (Some(h), Some(k)) = (
                homology.get(&(s.clone(), t, ComplexKind::HairyPi)),
                homology.get(&(s.clone(), t, ComplexKind::KoszulPi)),
            ) else {
                continue;
            };
            duality.items += 1;
            let c = compare(&params, &s, t, h, k);
            for row in c.mismatches() {
                duality.fail(format!(
                    "{params} s={s:?} t={t} degree {}: hairy {} vs koszul {}",
                    row.degree, row.hairy, row.koszul
                ));
            }
            if c.hairy_euler != c.koszul_euler {
                euler.fail(format!(
                    "{params} s={s:?} t={t}: Euler {} vs {}",
                    c.hairy_euler, c.koszul_euler
                ));
            }
        }
    }

    let (trees, pi0, genus) = if in_range {
        let mut trees = CheckResult::new("tree-vs-lie-oracle");
        for s in hair_vectors(params.r(), cfg.max_hairs) {
            let total: usize = s.iter().sum();
            if total == 0 || total > cfg.max_complexity + 1 {
                continue;
            }
            let oracle = tree_homology_oracle(&params, &s)?;
            let have: Vec<(i64, usize)> = if total >= 2 {
                homology.get(&(s.clone(), total - 1, ComplexKind::HairyPi)).map(|h| h.support()).unwrap_or_default()
            } else {
                Vec::new()
            };
            let want: Vec<(i64, usize)> = oracle.iter().map(|(_, n, d)| (n, d)).collect();
            trees.items += 1;
            if have != want {
                trees.fail(format!("{params} s={s:?}: hairy {have:?} vs oracle {want:?}"));
            }
        }
        let mut pi0 = CheckResult::new("pi0-vs-whitehead");
        let w = whitehead_kernel_dim(&params)?;
        let h = hairy_degree_zero_dim(&params, &cfg.rank_options())?;
        pi0.items = 1;
        if w != h {
            pi0.fail(format!("{params}: degree-zero hairy homology {h} vs Whitehead kernel {w}"));
        }
        let mut genus = CheckResult::new("genus-degree");
        let sweep = genus_degree_sweep(&params, cfg.max_hairs, cfg.max_complexity)?;
        genus.items = sweep.generators_checked;
        for (s, t, n) in sweep.violations {
            genus.fail(format!("{params} s={s:?} t={t}: generator of positive genus in degree {n}"));
        }
        (trees, pi0, genus)
    } else {
        (
            CheckResult::skipped("tree-vs-lie-oracle"),
            CheckResult::skipped("pi0-vs-whitehead"),
            CheckResult::skipped("genus-degree"),
        )
    };

    let checks = vec![square, euler, cache, duality, trees, pi0, genus];
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(CheckReport {
        codimension: params.codimension(),
        below_theorem_range: !in_range,
        params,
        checks,
        passed,
    })
}
