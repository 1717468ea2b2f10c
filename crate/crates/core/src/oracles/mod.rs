//! Independent combinatorial oracles: configuration-space Poincaré
//! polynomials, free graded Lie algebras, the tree part of the hairy
//! complex and the Whitehead kernel.

mod config;
mod lie;
mod tree;

pub use config::config_poincare;
pub use lie::{
    free_graded_lie_dims, lie_operad_dim, necklace_count, weights_of_total, FreeLie, LieElement,
    MultigradedDims, Word,
};
pub use tree::{sphere_lie, tree_degree, tree_homology_oracle, whitehead_kernel_dim};
