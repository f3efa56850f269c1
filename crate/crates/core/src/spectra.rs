//! Root-of-unity spectrum analysis for integer matrices.
//!
//! A unimodular matrix acts on the integer lattice; whether any of its
//! eigenvalues is a root of unity controls the index of the sublattice
//! spanned by `m*(M^k - I)`. The test is exact: an eigenvalue that is a
//! primitive k-th root of unity forces the k-th cyclotomic polynomial (of
//! degree phi(k) <= n) to divide the characteristic polynomial, so checking
//! polynomial gcds over the finitely many admissible orders decides the
//! question with no numerics.

use crate::arith::{poly_gcd, IntPolynomial};
use crate::error::{Error, Result};
use crate::intlinalg::{lattice_index, IntMatrix, LatticeIndex};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1);
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            phi -= phi / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// All orders k whose primitive roots of unity can occur as eigenvalues of
/// an n x n integer matrix, i.e. {k : phi(k) <= n}. Since phi(k) > sqrt(k/2),
/// scanning k <= 2n^2 is exhaustive.
pub fn totient_bounded_orders(n: usize) -> Vec<u64> {
    assert!(n >= 1, "rank must be positive");
    let bound = 2 * (n as u64) * (n as u64);
    (1..=bound).filter(|&k| euler_phi(k) <= n as u64).collect()
}

/// The k-th cyclotomic polynomial, by exact division of x^k - 1 by the
/// cyclotomic polynomials of the proper divisors of k.
pub fn cyclotomic(k: u64) -> IntPolynomial {
    assert!(k >= 1);
    let mut table: Vec<IntPolynomial> = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let mut q = IntPolynomial::x_pow_minus_one(m as usize);
        for d in 1..m {
            if m % d == 0 {
                q = q
                    .exact_div(&table[d as usize - 1])
                    .expect("cyclotomic division is exact");
            }
        }
        table.push(q);
    }
    table.pop().unwrap()
}

/// Verdict of the root-of-unity eigenvalue test, with one witness per order
/// whose cyclotomic polynomial divides the characteristic polynomial.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub quasi_unipotent: bool,
    pub witnesses: Vec<(u64, IntPolynomial)>,
}

impl SpectrumReport {
    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|(k, g)| json!({ "order": k, "gcd": g.to_string() }))
            .collect();
        json!({ "quasi_unipotent": self.quasi_unipotent, "witnesses": witnesses })
    }
}

/// Does some eigenvalue of `m` lie on the unit circle as a root of unity?
/// Decided by gcds of the characteristic polynomial with the cyclotomic
/// polynomials of every admissible order.
pub fn is_quasi_unipotent(m: &IntMatrix) -> SpectrumReport {
    let p = m.char_poly();
    let mut witnesses = Vec::new();
    for k in totient_bounded_orders(m.rank()) {
        let g = poly_gcd(&p, &cyclotomic(k));
        if g.degree().unwrap_or(0) > 0 {
            witnesses.push((k, g));
        }
    }
    SpectrumReport {
        quasi_unipotent: !witnesses.is_empty(),
        witnesses,
    }
}

/// A unimodular n x n matrix none of whose eigenvalues is a root of unity:
/// a block-diagonal sum of the companion matrices of x^2 - 3x + 1 and
/// x^3 - x^2 - x - 1 (one cubic block exactly when n is odd).
pub fn spectrum_free_automorphism(n: usize) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::RankTooSmall { min: 2, got: n });
    }
    let quadratic = IntMatrix::companion(&IntPolynomial::from_i64_coeffs(&[1, -3, 1])).unwrap();
    let cubic = IntMatrix::companion(&IntPolynomial::from_i64_coeffs(&[-1, -1, -1, 1])).unwrap();
    let pairs = if n.is_multiple_of(2) {
        n / 2
    } else {
        (n - 3) / 2
    };
    let mut blocks: Vec<&IntMatrix> = vec![&quadratic; pairs];
    if !n.is_multiple_of(2) {
        blocks.push(&cubic);
    }
    let m = IntMatrix::block_diagonal(&blocks);
    debug_assert!(m.is_unimodular());
    debug_assert!(!is_quasi_unipotent(&m).quasi_unipotent);
    Ok(m)
}

/// Index in Z^n of the sublattice {phi^k(m*a) - m*a : a in Z^n}, i.e. the
/// image of m*(phi^k - I). Finite exactly when no eigenvalue of `phi` is a
/// k-th root of unity.
pub fn commutator_lattice_index(phi: &IntMatrix, m: i64, k: i64) -> Result<LatticeIndex> {
    if !phi.is_unimodular() {
        return Err(Error::NotUnimodular {
            det: phi.determinant().abs(),
        });
    }
    if m <= 0 {
        return Err(Error::NonPositive { name: "m", got: m });
    }
    if k <= 0 {
        return Err(Error::NonPositive { name: "k", got: k });
    }
    let diff = &phi.pow(k as u64) - &IntMatrix::identity(phi.rank());
    Ok(lattice_index(&diff.scale(&BigInt::from(m))))
}
