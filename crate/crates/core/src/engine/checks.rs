use std::collections::BTreeSet;

use serde::Serialize;

use super::block::{build_block, BlockKey, BuildOptions, ComplexKind};
use super::homology::{block_homology, BlockHomology};
use super::table::hair_vectors;
use crate::error::Result;
use crate::graded::Params;
use crate::hairy::enumerate_generators;
use crate::linalg::RankOptions;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossRow {
    pub degree: i64,
    pub hairy: usize,
    pub koszul: usize,
}

/// Degreewise comparison of the hairy and Koszul homology of one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub params: Params,
    pub s: Vec<usize>,
    pub t: usize,
    pub rows: Vec<CrossRow>,
    pub hairy_euler: i64,
    pub koszul_euler: i64,
}

impl CrossCheck {
    pub fn mismatches(&self) -> Vec<&CrossRow> {
        self.rows.iter().filter(|r| r.hairy != r.koszul).collect()
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty() && self.hairy_euler == self.koszul_euler
    }
}

/// Compares two already reduced blocks.
pub fn compare(params: &Params, s: &[usize], t: usize, hairy: &BlockHomology, koszul: &BlockHomology) -> CrossCheck {
    let degrees: BTreeSet<i64> =
        hairy.slices.iter().chain(&koszul.slices).map(|sl| sl.degree).collect();
    CrossCheck {
        params: params.clone(),
        s: s.to_vec(),
        t,
        rows: degrees
            .into_iter()
            .map(|n| CrossRow { degree: n, hairy: hairy.dim_at(n), koszul: koszul.dim_at(n) })
            .collect(),
        hairy_euler: hairy.euler,
        koszul_euler: koszul.euler,
    }
}

/// Builds the hairy and the connected Koszul block for `(s, t)` and compares
/// their homology.
pub fn cross_check(params: &Params, s: &[usize], t: usize, rank: &RankOptions) -> Result<CrossCheck> {
    let opts = BuildOptions::default();
    let side = |kind| -> Result<BlockHomology> {
        let key = BlockKey::new(params.clone(), s.to_vec(), t, kind)?;
        block_homology(&build_block(&key, &opts)?, rank)
    };
    Ok(compare(params, s, t, &side(ComplexKind::HairyPi)?, &side(ComplexKind::KoszulPi)?))
}

/// Outcome of scanning generators of positive genus for their degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GenusSweep {
    pub generators_checked: usize,
    /// `(s, t, degree)` of offending generators.
    pub violations: Vec<(Vec<usize>, usize, i64)>,
}

/// Checks that every hairy generator of positive genus in the grid has
/// positive degree. Zero generators are included.
pub fn genus_degree_sweep(params: &Params, max_hairs: usize, max_complexity: usize) -> Result<GenusSweep> {
    let mut out = GenusSweep::default();
    for s in hair_vectors(params.r(), max_hairs) {
        let total: usize = s.iter().sum();
        for t in total..=max_complexity {
            // t >= total means genus >= 1
            let en = enumerate_generators(params, &s, t, None)?;
            for (&n, gens) in &en.by_degree {
                let count = gens.len() + en.zero_discarded.get(&n).copied().unwrap_or(0);
                out.generators_checked += count;
                if n < 1 && count > 0 {
                    out.violations.push((s.clone(), t, n));
                }
            }
            for (&n, &count) in &en.zero_discarded {
                if en.by_degree.contains_key(&n) {
                    continue;
                }
                out.generators_checked += count;
                if n < 1 && count > 0 {
                    out.violations.push((s.clone(), t, n));
                }
            }
        }
    }
    Ok(out)
}

/// Largest total hair count for which a tree can sit in degree zero.
pub fn degree_zero_hair_bound(params: &Params) -> usize {
    let step = params.m.iter().map(|m| params.d - m - 2).min().unwrap_or(1).max(1);
    ((params.d - 3).max(0) / step) as usize
}

/// Total dimension of degree-zero hairy homology over all blocks that can
/// carry it: every hair vector up to [`degree_zero_hair_bound`] with genus
/// zero or one.
pub fn hairy_degree_zero_dim(params: &Params, rank: &RankOptions) -> Result<usize> {
    let bound = degree_zero_hair_bound(params);
    let opts = BuildOptions { degree_window: Some((0, 0)), truncation: None };
    let mut total = 0;
    for s in hair_vectors(params.r(), bound) {
        let hairs: usize = s.iter().sum();
        if hairs < 2 {
            continue;
        }
        for t in hairs - 1..=hairs {
            let key = BlockKey::new(params.clone(), s.clone(), t, ComplexKind::HairyPi)?;
            total += block_homology(&build_block(&key, &opts)?, rank)?.dim_at(0);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_graph_on_both_sides() {
        let p = Params::new(vec![2], 6).unwrap();
        let c = cross_check(&p, &[2], 1, &RankOptions::default()).unwrap();
        assert!(c.passed());
        assert_eq!(c.rows, vec![CrossRow { degree: 1, hairy: 1, koszul: 1 }]);
        let p = Params::new(vec![2], 7).unwrap();
        let c = cross_check(&p, &[2], 1, &RankOptions::default()).unwrap();
        assert!(c.passed());
        assert!(c.rows.iter().all(|r| r.hairy == 0));
    }

    #[test]
    fn hair_bounds() {
        assert_eq!(degree_zero_hair_bound(&Params::new(vec![3], 6).unwrap()), 3);
        assert_eq!(degree_zero_hair_bound(&Params::new(vec![3], 7).unwrap()), 2);
        assert_eq!(degree_zero_hair_bound(&Params::new(vec![2, 3], 9).unwrap()), 1);
    }
}
