//! Lifting automorphisms of the integer lattice to substitutions of the
//! free group.
//!
//! A unimodular matrix factors into elementary row operations, and each
//! elementary matrix is the abelianization of a Nielsen substitution:
//! adding c times row i to row j corresponds to x_j -> x_j x_i^c, a row
//! swap to exchanging two generators, a row negation to inverting one.
//! Composing the substitutions in factor order produces an automorphism of
//! the free group whose abelianization is exactly the input matrix; it then
//! descends to an automorphism of the free metabelian quotients.

use crate::error::{Error, Result};
use crate::intlinalg::{elementary_decomposition, ElementaryMove, IntMatrix};
use crate::words::Word;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// An endomorphism of the free group given by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EndomorphismWords {
    rank: usize,
    images: Vec<Word>,
}

impl EndomorphismWords {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        assert!(rank >= 1, "rank must be positive");
        for w in &images {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
        }
        Ok(EndomorphismWords { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank)
            .map(|i| Word::generator(rank, i).unwrap())
            .collect();
        EndomorphismWords { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of the i-th generator, 1-indexed.
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    /// Substitute generator images into `w` and reduce.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        let mut letters = Vec::new();
        for l in w.letters() {
            let image = &self.images[l.generator() - 1];
            if l.is_inverse() {
                letters.extend(image.inverse().letters().iter().copied());
            } else {
                letters.extend(image.letters().iter().copied());
            }
        }
        Word::from_letters(self.rank, letters)
    }

    /// Composite `self` after `inner`: x_i -> self(inner(x_i)).
    pub fn compose(&self, inner: &EndomorphismWords) -> Result<EndomorphismWords> {
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        EndomorphismWords::new(images)
    }

    /// The matrix whose column i is the exponent-sum vector of images[i].
    pub fn abelianization_matrix(&self) -> IntMatrix {
        let columns: Vec<Vec<i64>> = self.images.iter().map(Word::abelianize).collect();
        IntMatrix::from_fn(self.rank, |r, c| BigInt::from(columns[c][r]))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "images": self.images.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn nielsen_substitution(rank: usize, mv: &ElementaryMove) -> EndomorphismWords {
    let mut endo = EndomorphismWords::identity(rank);
    match mv {
        ElementaryMove::AddMultiple {
            target,
            source,
            factor,
        } => {
            let exponent = factor.to_i64().expect("substitution exponent exceeds i64");
            let xs = Word::generator(rank, source + 1).unwrap();
            let xt = Word::generator(rank, target + 1).unwrap();
            endo.images[*source] = xs.concat(&xt.pow(exponent)).unwrap();
        }
        ElementaryMove::Swap { a, b } => {
            endo.images.swap(*a, *b);
        }
        ElementaryMove::Negate { row } => {
            endo.images[*row] = endo.images[*row].inverse();
        }
    }
    endo
}

/// Lift a unimodular matrix to a free-group automorphism inducing it on the
/// abelianization. Built as a composition of Nielsen substitutions, one per
/// elementary factor of the matrix.
pub fn lift_matrix(m: &IntMatrix) -> Result<EndomorphismWords> {
    let seq = elementary_decomposition(m)?;
    let rank = m.rank();
    let mut lifted = EndomorphismWords::identity(rank);
    for mv in seq.moves() {
        lifted = lifted.compose(&nielsen_substitution(rank, mv))?;
    }
    assert_eq!(
        &lifted.abelianization_matrix(),
        m,
        "lift does not abelianize to its input"
    );
    Ok(lifted)
}
