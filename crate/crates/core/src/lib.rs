//! Exact computations in the Hopf algebra of decorated planar binary trees.
//!
//! Coefficients are arbitrary-precision integers (the structure constants of
//! product, coproduct and antipode are all integral); rational arithmetic is
//! only used internally for kernels.

pub mod coalgebra;
pub mod error;
pub mod freemod;
pub mod hopf;
pub mod linalg;
pub mod memo;
pub mod product;
pub mod tree;

pub use error::{Error, Result};
pub use freemod::{Coeff, Combination, LinComb, TensorComb};
pub use tree::{Alphabet, Direction, EdgePath, Label, Tree};
