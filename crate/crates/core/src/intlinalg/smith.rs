//! Smith normal form over the integers, with the unimodular transforms kept
//! alongside the diagonal so every result can be re-multiplied and checked.

use crate::error::Result;
use crate::intlinalg::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Decomposition `u * m * v = s` with `u`, `v` unimodular and `s` diagonal,
/// nonnegative, each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SmithDecomposition {
    pub fn s(&self) -> &IntMatrix {
        &self.s
    }

    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    /// The nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rank())
            .map(|i| self.s[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Index of the column span of `m` inside the full integer lattice: the
/// product of the invariant factors when `m` has full rank, infinite
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn is_finite(&self) -> bool {
        matches!(self, LatticeIndex::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(i) => Some(i),
            LatticeIndex::Infinite => None,
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(i) => write!(f, "{i}"),
            LatticeIndex::Infinite => write!(f, "INFINITE"),
        }
    }
}

struct Reduction {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Reduction {
    fn n(&self) -> usize {
        self.s.rank()
    }

    fn row_add(&mut self, target: usize, source: usize, c: &BigInt) {
        for m in [&mut self.s, &mut self.u] {
            for j in 0..m.rank() {
                let t = m[(target, j)].clone() + c * &m[(source, j)];
                m.set(target, j, t);
            }
        }
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for m in [&mut self.s, &mut self.u] {
            for j in 0..m.rank() {
                let x = m[(a, j)].clone();
                let y = m[(b, j)].clone();
                m.set(a, j, y);
                m.set(b, j, x);
            }
        }
    }

    fn row_negate(&mut self, r: usize) {
        for m in [&mut self.s, &mut self.u] {
            for j in 0..m.rank() {
                let x = -m[(r, j)].clone();
                m.set(r, j, x);
            }
        }
    }

    fn col_add(&mut self, target: usize, source: usize, c: &BigInt) {
        for m in [&mut self.s, &mut self.v] {
            for i in 0..m.rank() {
                let t = m[(i, target)].clone() + c * &m[(i, source)];
                m.set(i, target, t);
            }
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for m in [&mut self.s, &mut self.v] {
            for i in 0..m.rank() {
                let x = m[(i, a)].clone();
                let y = m[(i, b)].clone();
                m.set(i, a, y);
                m.set(i, b, x);
            }
        }
    }

    /// Smallest nonzero entry (by absolute value) of the trailing submatrix.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.n() {
            for j in t..self.n() {
                if self.s[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if self.s[b].abs() <= self.s[(i, j)].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Drive position `t` to a pivot whose row and column are otherwise zero.
    fn clear_position(&mut self, t: usize) {
        loop {
            let Some((r, c)) = self.find_pivot(t) else {
                return; // trailing submatrix is zero
            };
            self.row_swap(t, r);
            self.col_swap(t, c);
            let mut dirty = false;
            for i in t + 1..self.n() {
                if self.s[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&self.s[(i, t)] / &self.s[(t, t)]);
                self.row_add(i, t, &q);
                if !self.s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..self.n() {
                if self.s[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&self.s[(t, j)] / &self.s[(t, t)]);
                self.col_add(j, t, &q);
                if !self.s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                return;
            }
        }
    }
}

/// Compute the Smith normal form of a square integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let n = m.rank();
    let mut red = Reduction {
        s: m.clone(),
        u: IntMatrix::identity(n),
        v: IntMatrix::identity(n),
    };
    // Diagonalize, then repair the divisibility chain by folding the
    // offending entry into the previous row and re-diagonalizing.
    let mut rounds = 0usize;
    loop {
        for t in 0..n {
            red.clear_position(t);
        }
        let broken = (0..n.saturating_sub(1)).find(|&i| {
            let a = &red.s[(i, i)];
            let b = &red.s[(i + 1, i + 1)];
            !b.is_zero() && (a.is_zero() || !(b % a).is_zero())
        });
        match broken {
            Some(i) => red.row_add(i, i + 1, &BigInt::one()),
            None => break,
        }
        rounds += 1;
        assert!(rounds <= 64 * n * n, "smith reduction failed to converge");
    }
    for i in 0..n {
        if red.s[(i, i)].is_negative() {
            red.row_negate(i);
        }
    }
    let result = SmithDecomposition {
        s: red.s,
        u: red.u,
        v: red.v,
    };
    debug_assert!(verify(m, &result).is_ok());
    result
}

fn verify(m: &IntMatrix, d: &SmithDecomposition) -> Result<()> {
    let n = m.rank();
    assert!(d.u.is_unimodular(), "left transform is not unimodular");
    assert!(d.v.is_unimodular(), "right transform is not unimodular");
    assert_eq!(&(&d.u * m) * &d.v, d.s, "u*m*v does not equal s");
    let diag: Vec<BigInt> = (0..n).map(|i| d.s[(i, i)].clone()).collect();
    for i in 0..n {
        for j in 0..n {
            assert!(i == j || d.s[(i, j)].is_zero(), "s is not diagonal");
        }
        assert!(!diag[i].is_negative(), "diagonal entry is negative");
        if i + 1 < n && !diag[i + 1].is_zero() {
            assert!(
                !diag[i].is_zero() && (&diag[i + 1] % &diag[i]).is_zero(),
                "divisibility chain broken at {i}"
            );
        }
    }
    Ok(())
}

/// Index of `m`'s column span in the ambient lattice, computed from the
/// invariant factors and cross-checked against the determinant.
pub fn lattice_index(m: &IntMatrix) -> LatticeIndex {
    let det = m.determinant();
    if det.is_zero() {
        return LatticeIndex::Infinite;
    }
    let d = smith_normal_form(m);
    let product: BigInt = d.invariant_factors().into_iter().product();
    assert_eq!(
        product,
        det.abs(),
        "invariant factor product disagrees with |det|"
    );
    LatticeIndex::Finite(product)
}
