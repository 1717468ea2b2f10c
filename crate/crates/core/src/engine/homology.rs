use serde::{Deserialize, Serialize};

use super::block::ChainBlock;
use crate::error::{inconsistent, Result};
use crate::linalg::{homology_dims, HomologySlice, RankOptions};

/// Homology of one block with its Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockHomology {
    pub slices: Vec<HomologySlice>,
    pub zero_discarded: Vec<usize>,
    pub euler: i64,
}

impl BlockHomology {
    pub fn dim_at(&self, degree: i64) -> usize {
        self.slices.iter().find(|s| s.degree == degree).map_or(0, |s| s.homology_dim)
    }

    pub fn total(&self) -> usize {
        self.slices.iter().map(|s| s.homology_dim).sum()
    }

    /// Nonzero homology as `(degree, dim)` pairs in increasing degree.
    pub fn support(&self) -> Vec<(i64, usize)> {
        let mut v: Vec<(i64, usize)> = self
            .slices
            .iter()
            .filter(|s| s.homology_dim > 0)
            .map(|s| (s.degree, s.homology_dim))
            .collect();
        v.sort();
        v
    }
}

fn signed(degree: i64, dim: usize) -> i64 {
    if degree.rem_euclid(2) == 0 {
        dim as i64
    } else {
        -(dim as i64)
    }
}

/// Euler characteristic computed from chain dimensions and from homology,
/// which must agree.
pub fn euler(slices: &[HomologySlice]) -> Result<i64> {
    let chains: i64 = slices.iter().map(|s| signed(s.degree, s.chain_dim)).sum();
    let homology: i64 = slices.iter().map(|s| signed(s.degree, s.homology_dim)).sum();
    if chains != homology {
        return inconsistent(format!(
            "Euler characteristic {chains} of chains differs from {homology} of homology"
        ));
    }
    Ok(chains)
}

pub fn block_homology(block: &ChainBlock, opts: &RankOptions) -> Result<BlockHomology> {
    let slices = homology_dims(&block.complex, opts)?;
    let euler = euler(&slices)?;
    Ok(BlockHomology { slices, zero_discarded: block.zero_discarded.clone(), euler })
}
