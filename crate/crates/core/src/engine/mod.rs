//! Block assembly, homology, cross-checks and derived tables.

mod block;
mod checks;
mod cofree;
mod homology;
mod table;

pub use block::{
    build_block, koszul_degree, BlockKey, BuildOptions, ChainBlock, ComplexKind, Truncation,
};
pub use checks::{
    compare, cross_check, degree_zero_hair_bound, genus_degree_sweep, hairy_degree_zero_dim,
    CrossCheck, CrossRow, GenusSweep,
};
pub use cofree::cofree_extension;
pub use homology::{block_homology, euler, BlockHomology};
pub use table::{
    compute_table, compute_table_with, hair_vectors, truncated_table, BlockResult, DimTable,
    GridSpec, HomologyTable, Record,
};
