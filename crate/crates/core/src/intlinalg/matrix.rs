//! Square matrices over the integers with exact arithmetic throughout.
//!
//! The convention is fixed once for the whole crate: matrices act on column
//! vectors, so "the image of basis vector i" is column i.

use crate::arith::IntPolynomial;
use crate::error::{Error, Result};
use crate::json::{bigint_from_json, bigint_to_json};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>, // row-major
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "matrix rank must be positive");
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MatrixFormat("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::MatrixFormat(format!(
                "expected a square {n}x{n} matrix"
            )));
        }
        Ok(IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("malformed i64 matrix literal")
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n);
        for (i, &d) in entries.iter().enumerate() {
            m.entries[i * n + i] = BigInt::from(d);
        }
        m
    }

    /// Companion matrix of a monic polynomial: subdiagonal of ones, last
    /// column the negated low coefficients, so its characteristic polynomial
    /// is the input.
    pub fn companion(p: &IntPolynomial) -> Result<Self> {
        let deg = p.degree().unwrap_or(0);
        if deg == 0 || !p.is_monic() {
            return Err(Error::MatrixFormat(format!(
                "companion matrix needs a monic polynomial of degree >= 1, got {p}"
            )));
        }
        let mut m = Self::zero(deg);
        for i in 1..deg {
            m.entries[i * deg + (i - 1)] = BigInt::one();
        }
        for i in 0..deg {
            m.entries[i * deg + (deg - 1)] = -p.coefficient(i);
        }
        Ok(m)
    }

    pub fn block_diagonal(blocks: &[&IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        assert!(n >= 1, "block sum must be nonempty");
        let mut m = Self::zero(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.entries[(off + i) * n + (off + j)] = b[(i, j)].clone();
                }
            }
            off += b.n;
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix-vector product (column-vector convention).
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn pow(&self, k: u64) -> IntMatrix {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Power with negative exponents allowed; requires |det| = 1 when k < 0.
    pub fn pow_signed(&self, k: i64) -> Result<IntMatrix> {
        if k >= 0 {
            Ok(self.pow(k as u64))
        } else {
            Ok(self.inverse_unimodular()?.pow(k.unsigned_abs()))
        }
    }

    /// Exact determinant (fraction-free Gaussian elimination).
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = t / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// Characteristic polynomial det(x*I - M), monic with exact integer
    /// coefficients (Faddeev-LeVerrier; all divisions are exact).
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut aux = Self::identity(n);
        for j in 1..=n {
            let mj = self * &aux;
            let c = -mj.trace() / BigInt::from(j as u64);
            aux = mj;
            for i in 0..n {
                let d = &aux.entries[i * n + i] + &c;
                aux.entries[i * n + i] = d;
            }
            coeffs[n - j] = c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Inverse of a matrix with determinant +-1, via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let det = self.determinant();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.abs() });
        }
        let n = self.n;
        if n == 1 {
            return Ok(IntMatrix::from_rows(vec![vec![det]]).unwrap());
        }
        let inv = Self::from_fn(n, |i, j| {
            // adjugate entry (i, j) = cofactor (j, i)
            let minor = self.minor(j, i);
            let c = minor.determinant();
            if (i + j) % 2 == 0 {
                c * &det
            } else {
                -c * &det
            }
        });
        debug_assert!((self * &inv).is_identity());
        Ok(inv)
    }

    fn minor(&self, row: usize, col: usize) -> IntMatrix {
        let n = self.n;
        Self::from_fn(n - 1, |i, j| {
            let r = if i < row { i } else { i + 1 };
            let c = if j < col { j } else { j + 1 };
            self.get(r, c).clone()
        })
    }

    /// Parse the compact row form `"0,-1;1,3"` (rows separated by `;`).
    pub fn parse_compact(text: &str) -> Result<Self> {
        let rows: Vec<Vec<BigInt>> = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<BigInt>()
                            .map_err(|err| Error::MatrixFormat(format!("entry {e:?}: {err}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn to_compact(&self) -> String {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// JSON array-of-arrays form.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.n)
                .map(|i| {
                    Value::Array(
                        (0..self.n)
                            .map(|j| bigint_to_json(self.get(i, j)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Json("expected an array of rows".into()))?;
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Json("expected an array row".into()))?
                    .iter()
                    .map(bigint_from_json)
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix rank mismatch");
        let n = self.n;
        IntMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix rank mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix rank mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for IntMatrix {
            type Output = IntMatrix;
            fn $m(self, rhs: IntMatrix) -> IntMatrix {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
