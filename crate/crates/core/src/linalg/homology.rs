use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rank::{rank_with, RankOptions};
use super::sparse::SparseMatrix;
use crate::error::{inconsistent, invalid, Result};

/// Homology data of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySlice {
    pub degree: i64,
    pub chain_dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub homology_dim: usize,
}

/// A finite complex `C_0 -> C_1 -> ... -> C_n` listed in the direction of the
/// differential. `maps[i]` has `dims[i+1]` rows and `dims[i]` columns.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedComplex {
    pub degrees: Vec<i64>,
    pub dims: Vec<usize>,
    pub maps: Vec<SparseMatrix<BigRational>>,
}

impl GradedComplex {
    pub fn validate(&self) -> Result<()> {
        if self.degrees.len() != self.dims.len() {
            return invalid("one dimension per degree is required");
        }
        if self.maps.len() + 1 != self.dims.len().max(1) {
            return invalid("a complex with n groups needs n-1 maps");
        }
        for (i, m) in self.maps.iter().enumerate() {
            if m.cols() != self.dims[i] || m.rows() != self.dims[i + 1] {
                return invalid(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    self.dims[i + 1],
                    self.dims[i]
                ));
            }
        }
        Ok(())
    }

    /// Checks that consecutive maps compose to zero.
    pub fn check_square_zero(&self) -> Result<()> {
        for i in 1..self.maps.len() {
            let comp = self.maps[i].mul(&self.maps[i - 1])?;
            if !comp.is_zero() {
                return inconsistent(format!(
                    "differential squares to a nonzero map from degree {} ({} nonzero entries)",
                    self.degrees[i - 1],
                    comp.nnz()
                ));
            }
        }
        Ok(())
    }
}

/// Rank-nullity per degree. Verifies that the differential squares to zero.
pub fn homology_dims(complex: &GradedComplex, opts: &RankOptions) -> Result<Vec<HomologySlice>> {
    complex.validate()?;
    complex.check_square_zero()?;
    let ranks = complex
        .maps
        .par_iter()
        .map(|m| rank_with(m, opts))
        .collect::<Result<Vec<_>>>()?;
    let n = complex.dims.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let rank_out = if i < ranks.len() { ranks[i] } else { 0 };
        let rank_in = if i > 0 { ranks[i - 1] } else { 0 };
        let dim = complex.dims[i];
        if rank_out + rank_in > dim {
            return inconsistent(format!(
                "ranks {rank_out} + {rank_in} exceed dimension {dim} in degree {}",
                complex.degrees[i]
            ));
        }
        out.push(HomologySlice {
            degree: complex.degrees[i],
            chain_dim: dim,
            rank_out,
            rank_in,
            homology_dim: dim - rank_out - rank_in,
        });
    }
    Ok(out)
}
