//! Factoring unimodular integer matrices into elementary row operations.
//!
//! The factorization feeds the lifting machinery: each elementary matrix has
//! an obvious preimage among basis substitutions, so writing a matrix as a
//! product of elementary ones writes an abelianized map as a composition of
//! liftable steps.

use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An elementary row operation on Z^n, identified with the matrix performing
/// it from the left. Rows are 0-indexed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementaryMove {
    /// Row `target` += `factor` * row `source` (matrix `I + factor*E_{ts}`).
    AddMultiple {
        target: usize,
        source: usize,
        factor: BigInt,
    },
    /// Exchange rows `a` and `b`.
    Swap { a: usize, b: usize },
    /// Multiply row `row` by -1.
    Negate { row: usize },
}

impl ElementaryMove {
    pub fn add_multiple(target: usize, source: usize, factor: impl Into<BigInt>) -> Self {
        assert_ne!(target, source, "row added to itself is not elementary");
        ElementaryMove::AddMultiple {
            target,
            source,
            factor: factor.into(),
        }
    }

    pub fn matrix(&self, n: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(n);
        match self {
            ElementaryMove::AddMultiple {
                target,
                source,
                factor,
            } => m.set(*target, *source, factor.clone()),
            ElementaryMove::Swap { a, b } => {
                m.set(*a, *a, BigInt::zero());
                m.set(*b, *b, BigInt::zero());
                m.set(*a, *b, BigInt::one());
                m.set(*b, *a, BigInt::one());
            }
            ElementaryMove::Negate { row } => m.set(*row, *row, BigInt::from(-1)),
        }
        m
    }

    pub fn inverse(&self) -> ElementaryMove {
        match self {
            ElementaryMove::AddMultiple {
                target,
                source,
                factor,
            } => ElementaryMove::AddMultiple {
                target: *target,
                source: *source,
                factor: -factor,
            },
            other => other.clone(),
        }
    }

    /// Apply the operation to `m` in place (left multiplication).
    fn apply(&self, m: &mut IntMatrix) {
        let n = m.rank();
        match self {
            ElementaryMove::AddMultiple {
                target,
                source,
                factor,
            } => {
                for j in 0..n {
                    let t = m[(*target, j)].clone() + factor * &m[(*source, j)];
                    m.set(*target, j, t);
                }
            }
            ElementaryMove::Swap { a, b } => {
                for j in 0..n {
                    let x = m[(*a, j)].clone();
                    let y = m[(*b, j)].clone();
                    m.set(*a, j, y);
                    m.set(*b, j, x);
                }
            }
            ElementaryMove::Negate { row } => {
                for j in 0..n {
                    let x = -m[(*row, j)].clone();
                    m.set(*row, j, x);
                }
            }
        }
    }
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMove::AddMultiple {
                target,
                source,
                factor,
            } => write!(f, "r{target} += {factor}*r{source}"),
            ElementaryMove::Swap { a, b } => write!(f, "r{a} <-> r{b}"),
            ElementaryMove::Negate { row } => write!(f, "r{row} *= -1"),
        }
    }
}

/// An ordered product `E_1 * E_2 * ... * E_m` of elementary matrices, all of
/// the same rank.
#[derive(Clone, Debug)]
pub struct ElementarySequence {
    n: usize,
    moves: Vec<ElementaryMove>,
}

impl ElementarySequence {
    pub fn new(n: usize, moves: Vec<ElementaryMove>) -> Self {
        ElementarySequence { n, moves }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn moves(&self) -> &[ElementaryMove] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Multiply the factors back together, left to right.
    pub fn product(&self) -> IntMatrix {
        // E_1 * (E_2 * (... * I)) applies the moves right-to-left.
        let mut m = IntMatrix::identity(self.n);
        for mv in self.moves.iter().rev() {
            mv.apply(&mut m);
        }
        m
    }
}

/// Factor a unimodular matrix into elementary moves whose product (in the
/// returned order) is the input. Fails when |det| is not 1.
pub fn elementary_decomposition(m: &IntMatrix) -> Result<ElementarySequence> {
    let det = m.determinant();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular { det: det.abs() });
    }
    let n = m.rank();
    let mut work = m.clone();
    let mut applied: Vec<ElementaryMove> = Vec::new();
    let push = |work: &mut IntMatrix, applied: &mut Vec<ElementaryMove>, mv: ElementaryMove| {
        mv.apply(work);
        applied.push(mv);
    };

    // Reduce each column below the diagonal by the Euclidean algorithm.
    for c in 0..n {
        loop {
            let pivot = (c..n)
                .filter(|&r| !work[(r, c)].is_zero())
                .min_by_key(|&r| work[(r, c)].abs());
            let r_min = pivot.expect("unimodular matrix lost full rank");
            let mut remainder = false;
            for r in c..n {
                if r == r_min || work[(r, c)].is_zero() {
                    continue;
                }
                let q = -(&work[(r, c)] / &work[(r_min, c)]);
                push(
                    &mut work,
                    &mut applied,
                    ElementaryMove::add_multiple(r, r_min, q),
                );
                if !work[(r, c)].is_zero() {
                    remainder = true;
                }
            }
            if !remainder {
                if r_min != c {
                    push(
                        &mut work,
                        &mut applied,
                        ElementaryMove::Swap { a: c, b: r_min },
                    );
                }
                break;
            }
        }
    }

    // Upper triangular with diagonal entries of absolute value 1.
    for i in 0..n {
        if work[(i, i)].is_negative() {
            push(&mut work, &mut applied, ElementaryMove::Negate { row: i });
        }
        debug_assert!(work[(i, i)].is_one());
    }

    // Clear above the diagonal.
    for c in (0..n).rev() {
        for r in 0..c {
            if work[(r, c)].is_zero() {
                continue;
            }
            let q = -work[(r, c)].clone();
            push(
                &mut work,
                &mut applied,
                ElementaryMove::add_multiple(r, c, q),
            );
        }
    }
    assert!(work.is_identity(), "row reduction did not reach identity");

    // applied_k * ... * applied_1 * m = I, so m is the product of the
    // inverses taken in application order.
    let moves = applied.iter().map(ElementaryMove::inverse).collect();
    let seq = ElementarySequence::new(n, moves);
    assert_eq!(&seq.product(), m, "factor product check failed");
    Ok(seq)
}
