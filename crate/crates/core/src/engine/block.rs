use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, invalid, Result};
use crate::graded::Params;
use crate::hairy::{canonicalize, enumerate_generators, expansion_differential, HairyGraph};
use crate::koszul::{coinvariant_basis, induced_differential, vertex_counts, CoinvariantBasis};
use crate::linalg::{GradedComplex, SparseMatrix};
use crate::{QMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComplexKind {
    /// Connected hairy graphs, homological.
    #[serde(rename = "hairy")]
    HairyPi,
    /// Connected Koszul graphs, cohomological.
    #[serde(rename = "koszul")]
    KoszulPi,
    /// All Koszul graphs including disconnected ones.
    #[serde(rename = "koszul-full")]
    KoszulFull,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::HairyPi => "hairy",
            ComplexKind::KoszulPi => "koszul",
            ComplexKind::KoszulFull => "koszul-full",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockKey {
    pub params: Params,
    pub s: Vec<usize>,
    pub t: usize,
    pub kind: ComplexKind,
}

impl BlockKey {
    pub fn new(params: Params, s: Vec<usize>, t: usize, kind: ComplexKind) -> Result<Self> {
        if s.len() != params.r() {
            return invalid(format!("s has {} entries but r = {}", s.len(), params.r()));
        }
        Ok(BlockKey { params, s, t, kind })
    }

    /// File-name friendly identifier.
    pub fn slug(&self) -> String {
        let join = |v: &[String]| v.join("-");
        format!(
            "{}_m{}_d{}_s{}_t{}",
            self.kind.name(),
            join(&self.params.m.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            self.params.d,
            join(&self.s.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            self.t
        )
    }
}

impl fmt::Display for BlockKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} s={:?} t={}", self.kind, self.params, self.s, self.t)
    }
}

/// Vertex-count truncation of the Koszul complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Truncation {
    /// Keep generators with at most `n` vertices.
    Total(usize),
    /// Keep generators with at most `n_i` vertices of color `i`.
    PerColor(Vec<usize>),
}

impl Truncation {
    pub fn admits(&self, kbar: &[usize]) -> bool {
        match self {
            Truncation::Total(n) => kbar.iter().sum::<usize>() <= *n,
            Truncation::PerColor(ns) => kbar.iter().zip(ns).all(|(k, n)| k <= n),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    /// Only degrees in this window (plus one on each side) are built.
    pub degree_window: Option<(i64, i64)>,
    pub truncation: Option<Truncation>,
}

/// Bases and differentials of one block, listed along the differential.
#[derive(Clone, Debug)]
pub struct ChainBlock {
    pub key: BlockKey,
    pub complex: GradedComplex,
    pub zero_discarded: Vec<usize>,
    /// Hairy generators per slice (empty for Koszul blocks).
    pub hairy_bases: Vec<Vec<HairyGraph>>,
    /// Vertex-count blocks contributing to each slice (empty for hairy blocks).
    pub vertex_blocks: Vec<Vec<Vec<usize>>>,
}

impl ChainBlock {
    pub fn is_empty(&self) -> bool {
        self.complex.dims.iter().all(|&d| d == 0)
    }
}

fn widen(w: Option<(i64, i64)>) -> Option<(i64, i64)> {
    w.map(|(lo, hi)| (lo - 1, hi + 1))
}

fn empty_block(key: &BlockKey) -> ChainBlock {
    ChainBlock {
        key: key.clone(),
        complex: GradedComplex { degrees: vec![], dims: vec![], maps: vec![] },
        zero_discarded: vec![],
        hairy_bases: vec![],
        vertex_blocks: vec![],
    }
}

/// Builds bases and differential matrices, verifying that the differential
/// squares to zero.
pub fn build_block(key: &BlockKey, opts: &BuildOptions) -> Result<ChainBlock> {
    let block = match key.kind {
        ComplexKind::HairyPi => build_hairy(key, opts)?,
        ComplexKind::KoszulPi | ComplexKind::KoszulFull => build_koszul(key, opts)?,
    };
    block.complex.validate()?;
    block.complex.check_square_zero()?;
    Ok(block)
}

fn build_hairy(key: &BlockKey, opts: &BuildOptions) -> Result<ChainBlock> {
    let params = &key.params;
    let en = enumerate_generators(params, &key.s, key.t, widen(opts.degree_window))?;
    let present: Vec<i64> =
        en.by_degree.keys().chain(en.zero_discarded.keys()).copied().collect();
    let (Some(&lo), Some(&hi)) = (present.iter().min(), present.iter().max()) else {
        return Ok(empty_block(key));
    };
    let degrees: Vec<i64> = (lo..=hi).rev().collect();
    let bases: Vec<Vec<HairyGraph>> =
        degrees.iter().map(|d| en.by_degree.get(d).cloned().unwrap_or_default()).collect();
    let mut maps = Vec::with_capacity(degrees.len().saturating_sub(1));
    for i in 0..degrees.len().saturating_sub(1) {
        let target: HashMap<&HairyGraph, usize> =
            bases[i + 1].iter().enumerate().map(|(j, g)| (g, j)).collect();
        let columns = bases[i]
            .par_iter()
            .map(|g| {
                let (gen, _) = canonicalize(g, params);
                expansion_differential(&gen, params)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut triplets = Vec::new();
        for (col, lc) in columns.into_iter().enumerate() {
            for (g, c) in lc {
                let Some(&row) = target.get(&g) else {
                    return inconsistent(format!("expansion of a generator in {key} left the basis"));
                };
                triplets.push((row, col, c));
            }
        }
        maps.push(SparseMatrix::from_triplets(bases[i + 1].len(), bases[i].len(), triplets)?);
    }
    Ok(ChainBlock {
        key: key.clone(),
        complex: GradedComplex { dims: bases.iter().map(Vec::len).collect(), degrees: degrees.clone(), maps },
        zero_discarded: degrees.iter().map(|d| en.zero_discarded.get(d).copied().unwrap_or(0)).collect(),
        hairy_bases: bases,
        vertex_blocks: vec![],
    })
}

/// Cohomological degree of a Koszul block with `k` vertices.
pub fn koszul_degree(params: &Params, s: &[usize], t: usize, k: usize) -> i64 {
    let total: usize = s.iter().sum();
    (params.d - 1) * t as i64 - (k as i64 - total as i64)
        - s.iter().zip(&params.m).map(|(&si, &mi)| si as i64 * mi).sum::<i64>()
}

fn build_koszul(key: &BlockKey, opts: &BuildOptions) -> Result<ChainBlock> {
    let params = &key.params;
    let connected = key.kind == ComplexKind::KoszulPi;
    if key.kind == ComplexKind::KoszulFull && key.t == 0 && key.s.iter().all(|&x| x == 0) {
        // the empty graph
        return Ok(ChainBlock {
            key: key.clone(),
            complex: GradedComplex { degrees: vec![0], dims: vec![1], maps: vec![] },
            zero_discarded: vec![0],
            hairy_bases: vec![],
            vertex_blocks: vec![vec![vec![0; params.r()]]],
        });
    }
    let window = widen(opts.degree_window);
    let kbars: Vec<Vec<usize>> = vertex_counts(&key.s, key.t)
        .into_iter()
        .filter(|kb| opts.truncation.as_ref().is_none_or(|tr| tr.admits(kb)))
        .filter(|kb| {
            let deg = koszul_degree(params, &key.s, key.t, kb.iter().sum());
            window.is_none_or(|(lo, hi)| lo <= deg && deg <= hi)
        })
        .collect();
    if kbars.is_empty() {
        return Ok(empty_block(key));
    }
    let spaces = kbars
        .par_iter()
        .map(|kb| coinvariant_basis(params, &key.s, key.t, kb, connected))
        .collect::<Result<Vec<CoinvariantBasis>>>()?;
    let mut by_k: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, kb) in kbars.iter().enumerate() {
        by_k.entry(kb.iter().sum()).or_default().push(i);
    }
    let k_max = *by_k.keys().next_back().expect("non-empty");
    let k_min = *by_k.keys().next().expect("non-empty");
    // ascending degree = descending vertex count
    let ks: Vec<usize> = (k_min..=k_max).rev().collect();
    let degrees: Vec<i64> = ks.iter().map(|&k| koszul_degree(params, &key.s, key.t, k)).collect();
    let groups: Vec<Vec<usize>> = ks.iter().map(|k| by_k.get(k).cloned().unwrap_or_default()).collect();
    let dims: Vec<usize> = groups.iter().map(|g| g.iter().map(|&i| spaces[i].dim()).sum()).collect();
    let zero_discarded: Vec<usize> =
        groups.iter().map(|g| g.iter().map(|&i| spaces[i].zero_orbits).sum()).collect();

    let mut maps = Vec::new();
    for step in 0..ks.len().saturating_sub(1) {
        let (src, dst) = (&groups[step], &groups[step + 1]);
        let mut dst_offset: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut targets: HashMap<Vec<usize>, &CoinvariantBasis> = HashMap::new();
        let mut off = 0;
        for &j in dst {
            dst_offset.insert(kbars[j].clone(), off);
            targets.insert(kbars[j].clone(), &spaces[j]);
            off += spaces[j].dim();
        }
        let mut jobs = Vec::new();
        let mut col = 0;
        for &i in src {
            for j in 0..spaces[i].dim() {
                jobs.push((i, j, col));
                col += 1;
            }
        }
        let columns = jobs
            .par_iter()
            .map(|&(i, j, col)| -> Result<Vec<(usize, usize, Rational)>> {
                let image = induced_differential(&spaces[i], j, &targets, params)?;
                Ok(image
                    .into_iter()
                    .flat_map(|(kb, coords)| {
                        let o = dst_offset[&kb];
                        coords.into_iter().map(move |(r, c)| (o + r, col, c))
                    })
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(QMatrix::from_triplets(dims[step + 1], dims[step], columns.into_iter().flatten())?);
    }
    Ok(ChainBlock {
        key: key.clone(),
        complex: GradedComplex { degrees, dims, maps },
        zero_discarded,
        hairy_bases: vec![],
        vertex_blocks: groups.iter().map(|g| g.iter().map(|&i| kbars[i].clone()).collect()).collect(),
    })
}
