use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::block::{build_block, BlockKey, BuildOptions, ChainBlock, ComplexKind, Truncation};
use super::homology::{block_homology, BlockHomology};
use crate::error::{invalid, Result};
use crate::graded::Params;
use crate::linalg::RankOptions;

/// All hair vectors with `r` entries and total at most `max_total`, in
/// lexicographic order.
pub fn hair_vectors(r: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur.push(a);
            go(r, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, max_total, &mut Vec::new(), &mut out);
    out
}

/// A rectangular family of blocks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub params: Params,
    pub max_hairs: usize,
    pub max_complexity: usize,
    pub kinds: Vec<ComplexKind>,
    pub degree_window: Option<(i64, i64)>,
    pub truncation: Option<Truncation>,
}

impl GridSpec {
    pub fn new(params: Params, max_hairs: usize, max_complexity: usize, kinds: Vec<ComplexKind>) -> Self {
        GridSpec { params, max_hairs, max_complexity, kinds, degree_window: None, truncation: None }
    }

    pub fn build_options(&self) -> BuildOptions {
        BuildOptions { degree_window: self.degree_window, truncation: self.truncation.clone() }
    }

    pub fn keys(&self) -> Result<Vec<BlockKey>> {
        if let Some((lo, hi)) = self.degree_window {
            if lo > hi {
                return invalid(format!("empty degree window [{lo}, {hi}]"));
            }
        }
        if let Some(Truncation::PerColor(ns)) = &self.truncation {
            if ns.len() != self.params.r() {
                return invalid(format!("{} truncation bounds for r = {}", ns.len(), self.params.r()));
            }
        }
        let mut keys = Vec::new();
        for s in hair_vectors(self.params.r(), self.max_hairs) {
            for t in 0..=self.max_complexity {
                for &kind in &self.kinds {
                    keys.push(BlockKey::new(self.params.clone(), s.clone(), t, kind)?);
                }
            }
        }
        Ok(keys)
    }
}

/// One output row: a single degree of a single block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub complex: ComplexKind,
    pub s: Vec<usize>,
    pub t: usize,
    pub degree: i64,
    pub chain_dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub homology_dim: usize,
    pub zero_generators_discarded: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockResult {
    pub key: BlockKey,
    pub homology: BlockHomology,
    pub basis_size: usize,
    pub wall_time_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub params: Params,
    pub below_theorem_range: bool,
    pub degree_window: Option<(i64, i64)>,
    pub blocks: Vec<BlockResult>,
}

impl HomologyTable {
    pub fn get(&self, s: &[usize], t: usize, kind: ComplexKind) -> Option<&BlockHomology> {
        self.blocks
            .iter()
            .find(|b| b.key.s == s && b.key.t == t && b.key.kind == kind)
            .map(|b| &b.homology)
    }

    /// Records inside the degree window, sorted by `(s, t, degree, complex)`.
    pub fn records(&self) -> Vec<Record> {
        let in_window =
            |n: i64| self.degree_window.is_none_or(|(lo, hi)| lo <= n && n <= hi);
        let mut out = Vec::new();
        for b in &self.blocks {
            for (i, sl) in b.homology.slices.iter().enumerate() {
                if !in_window(sl.degree) {
                    continue;
                }
                out.push(Record {
                    complex: b.key.kind,
                    s: b.key.s.clone(),
                    t: b.key.t,
                    degree: sl.degree,
                    chain_dim: sl.chain_dim,
                    rank_in: sl.rank_in,
                    rank_out: sl.rank_out,
                    homology_dim: sl.homology_dim,
                    zero_generators_discarded: b.homology.zero_discarded.get(i).copied().unwrap_or(0),
                });
            }
        }
        out.sort_by(|a, b| (&a.s, a.t, a.degree, a.complex).cmp(&(&b.s, b.t, b.degree, b.complex)));
        out
    }

    /// Homology dimensions keyed by `(s, t, degree)` for one complex kind.
    pub fn dims(&self, kind: ComplexKind) -> DimTable {
        let mut out = DimTable::new();
        for b in self.blocks.iter().filter(|b| b.key.kind == kind) {
            for sl in &b.homology.slices {
                if sl.homology_dim > 0 {
                    out.insert((b.key.s.clone(), b.key.t, sl.degree), sl.homology_dim);
                }
            }
        }
        out
    }
}

/// Dimensions keyed by `(s, t, degree)`, zeros omitted.
pub type DimTable = BTreeMap<(Vec<usize>, usize, i64), usize>;

/// Builds and reduces every block of the grid, one rayon job per block.
pub fn compute_table(spec: &GridSpec, rank: &RankOptions) -> Result<HomologyTable> {
    compute_table_with(spec, rank, build_block)
}

/// Like [`compute_table`], with a caller-supplied way of producing blocks.
pub fn compute_table_with<F>(spec: &GridSpec, rank: &RankOptions, provide: F) -> Result<HomologyTable>
where
    F: Fn(&BlockKey, &BuildOptions) -> Result<ChainBlock> + Sync,
{
    let opts = spec.build_options();
    let keys = spec.keys()?;
    let blocks = keys
        .par_iter()
        .map(|key| -> Result<Option<BlockResult>> {
            let start = Instant::now();
            let block = provide(key, &opts)?;
            if block.complex.degrees.is_empty() {
                return Ok(None);
            }
            let homology = block_homology(&block, rank)?;
            Ok(Some(BlockResult {
                key: key.clone(),
                basis_size: block.complex.dims.iter().sum(),
                homology,
                wall_time_ms: start.elapsed().as_millis(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyTable {
        params: spec.params.clone(),
        below_theorem_range: !spec.params.in_theorem_range(),
        degree_window: spec.degree_window,
        blocks: blocks.into_iter().flatten().collect(),
    })
}

/// Homology of the Koszul complex restricted to generators admitted by the
/// truncation.
pub fn truncated_table(
    params: &Params,
    max_hairs: usize,
    max_complexity: usize,
    truncation: Truncation,
    kind: ComplexKind,
    rank: &RankOptions,
) -> Result<HomologyTable> {
    if kind == ComplexKind::HairyPi {
        return invalid("truncations apply to Koszul complexes only");
    }
    let mut spec = GridSpec::new(params.clone(), max_hairs, max_complexity, vec![kind]);
    spec.truncation = Some(truncation);
    compute_table(&spec, rank)
}
