//! Exact sparse linear algebra.

mod homology;
mod rank;
mod span;
mod sparse;

pub use homology::{homology_dims, GradedComplex, HomologySlice};
pub use rank::{
    field_rank, fraction_free_rank, rank, rank_with, RankOptions, VERIFICATION_PRIMES,
};
pub use span::SpanBuilder;
pub use sparse::SparseMatrix;
