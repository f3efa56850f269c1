//! The extension of the integer lattice by a single unimodular automorphism:
//! pairs (v, i) representing the element "translate by v, then act by the
//! i-th power of the matrix", with group law (v, i)(w, j) = (v + M^i w, i+j).
//!
//! Commutators of translations against powers of the automorphism sweep out
//! the sublattice (M^-k - I)Z^n, whose index matches the one computed from
//! Smith normal forms up to the unimodular factor M^-k.

use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use crate::json::bigint_to_json;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemidirectElement {
    matrix: IntMatrix,
    vector: Vec<BigInt>,
    power: i64,
}

impl SemidirectElement {
    pub fn new(matrix: IntMatrix, vector: Vec<BigInt>, power: i64) -> Result<Self> {
        if !matrix.is_unimodular() {
            return Err(Error::NotUnimodular {
                det: num_traits::Signed::abs(&matrix.determinant()),
            });
        }
        if vector.len() != matrix.rank() {
            return Err(Error::RankMismatch {
                left: matrix.rank(),
                right: vector.len(),
            });
        }
        Ok(SemidirectElement {
            matrix,
            vector,
            power,
        })
    }

    pub fn identity(matrix: IntMatrix) -> Result<Self> {
        let n = matrix.rank();
        Self::new(matrix, vec![BigInt::zero(); n], 0)
    }

    /// The translation (v, 0).
    pub fn translation(matrix: IntMatrix, vector: Vec<BigInt>) -> Result<Self> {
        Self::new(matrix, vector, 0)
    }

    /// The automorphism power (0, i).
    pub fn automorphism_power(matrix: IntMatrix, power: i64) -> Result<Self> {
        let n = matrix.rank();
        Self::new(matrix, vec![BigInt::zero(); n], power)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.vector.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &SemidirectElement) -> Result<SemidirectElement> {
        if self.matrix != rhs.matrix {
            return Err(Error::ActionMismatch);
        }
        let acted = self
            .matrix
            .pow_signed(self.power)
            .expect("validated unimodular")
            .mul_vec(&rhs.vector);
        let vector = self.vector.iter().zip(acted).map(|(a, b)| a + b).collect();
        Ok(SemidirectElement {
            matrix: self.matrix.clone(),
            vector,
            power: self.power + rhs.power,
        })
    }

    /// (v, i)^-1 = (-M^-i v, -i).
    pub fn inverse(&self) -> SemidirectElement {
        let back = self
            .matrix
            .pow_signed(-self.power)
            .expect("validated unimodular");
        let vector = back.mul_vec(&self.vector).into_iter().map(|x| -x).collect();
        SemidirectElement {
            matrix: self.matrix.clone(),
            vector,
            power: -self.power,
        }
    }

    /// `[self, rhs] = self^-1 rhs^-1 self rhs`.
    pub fn commutator(&self, rhs: &SemidirectElement) -> Result<SemidirectElement> {
        self.inverse().mul(&rhs.inverse())?.mul(self)?.mul(rhs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matrix": self.matrix.to_json(),
            "vector": self.vector.iter().map(bigint_to_json).collect::<Vec<_>>(),
            "power": self.power,
        })
    }
}
