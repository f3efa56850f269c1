//! Exact integer linear algebra: matrices, Smith normal form, and
//! elementary factorizations of unimodular matrices.

mod elementary;
mod matrix;
mod smith;

pub use elementary::{elementary_decomposition, ElementaryMove, ElementarySequence};
pub use matrix::IntMatrix;
pub use smith::{lattice_index, smith_normal_form, LatticeIndex, SmithDecomposition};
