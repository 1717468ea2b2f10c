//! Colored hairy graph complexes, Koszul forest complexes, and their exact
//! rational homology.

pub mod cache;
pub mod engine;
pub mod error;
pub mod graded;
pub mod hairy;
pub mod koszul;
pub mod lincomb;
pub mod linalg;
pub mod oracles;
pub mod scalar;

pub use error::{Error, Result};
pub use graded::{Params, Sign};
pub use lincomb::LinearCombination;
pub use scalar::{Field, Fp, Scalar};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;
pub type QMatrix = linalg::SparseMatrix<Rational>;
pub type QCombination<K> = LinearCombination<K, Rational>;
pub type Fp31 = Fp<2147483647>;
