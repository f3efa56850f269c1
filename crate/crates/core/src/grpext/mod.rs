//! Element arithmetic in the extension groups used as commutator
//! receptacles: a cyclic-by-infinite-cyclic wreath product and the
//! semidirect product of the integer lattice with one automorphism.

mod semidirect;
mod wreath;

pub use semidirect::SemidirectElement;
pub use wreath::{eval_in_wreath, lcs_witness, WreathElement};
