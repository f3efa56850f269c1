//! Exact-arithmetic toolkit for automorphisms of free abelian, free
//! metabelian, and related relatively free groups.
//!
//! Everything here is computed over Z (or Z/kZ) with no floating point, so
//! each claim the crate makes is backed by an integer identity that can be
//! re-multiplied and checked. The main threads:
//!
//! - integer matrices with exact determinants, characteristic polynomials,
//!   Smith normal forms, and elementary factorizations ([`intlinalg`]);
//! - detection of eigenvalues that are roots of unity, and the construction
//!   of automorphisms avoiding them ([`spectra`]);
//! - words in free groups, their normal forms under the metabelian law, and
//!   membership tests via free differential calculus ([`words`],
//!   [`metabelian`]);
//! - wreath products and semidirect products used as receptacles for
//!   commutator computations ([`grpext`]);
//! - lifting of matrices to basis substitutions of the free group ([`lift`]).

pub mod arith;
pub mod error;
pub mod grpext;
pub mod intlinalg;
mod json;
pub mod lift;
pub mod metabelian;
pub mod spectra;
pub mod words;

pub use error::{Error, Result};
