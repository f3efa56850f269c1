//! Multivariate Laurent polynomials over Z or Z/kZ.
//!
//! These are elements of the group ring of a free abelian group: every term
//! is a coefficient times a monomial `t1^e1 * ... * tn^en` with integer
//! (possibly negative) exponents. The exponent vectors all share one fixed
//! length, the rank. Stored coefficients are never zero, and with modulus
//! k >= 2 they are kept in `1..k`. Modulus 0 means integer coefficients;
//! modulus 1 is rejected everywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPolynomial {
    rank: usize,
    modulus: u64,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize, modulus: u64) -> Result<Self> {
        if modulus == 1 {
            return Err(Error::TrivialModulus);
        }
        Ok(LaurentPolynomial {
            rank,
            modulus,
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(rank: usize, modulus: u64, c: impl Into<BigInt>) -> Result<Self> {
        Self::monomial(rank, modulus, vec![0; rank], c)
    }

    pub fn one(rank: usize, modulus: u64) -> Result<Self> {
        Self::constant(rank, modulus, 1)
    }

    /// A single term `c * t^exponents`.
    pub fn monomial(
        rank: usize,
        modulus: u64,
        exponents: Vec<i64>,
        c: impl Into<BigInt>,
    ) -> Result<Self> {
        let mut p = Self::zero(rank, modulus)?;
        assert_eq!(exponents.len(), rank, "exponent vector length != rank");
        p.add_term(exponents, c.into());
        Ok(p)
    }

    pub fn from_terms<I>(rank: usize, modulus: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(rank, modulus)?;
        for (exps, c) in terms {
            assert_eq!(exps.len(), rank, "exponent vector length != rank");
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[i64]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Add `c * t^exps` in place, keeping the canonical representation.
    pub fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        let modulus = self.modulus;
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                let c = canon(modulus, c);
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = canon(modulus, o.get() + c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply by a single monomial `c * t^exps`.
    pub fn mul_monomial(&self, exps: &[i64], c: &BigInt) -> LaurentPolynomial {
        assert_eq!(exps.len(), self.rank, "exponent vector length != rank");
        let mut out = LaurentPolynomial {
            rank: self.rank,
            modulus: self.modulus,
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            let shifted: Vec<i64> = e.iter().zip(exps).map(|(x, y)| x + y).collect();
            out.add_term(shifted, a * c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPolynomial {
        self.mul_monomial(&vec![0; self.rank], c)
    }

    /// Reduce an integer-coefficient polynomial into Z/kZ.
    ///
    /// `k = 0` returns the polynomial unchanged, `k = 1` is rejected, and the
    /// input must not already carry a modulus.
    pub fn reduce_mod(&self, k: u64) -> Result<LaurentPolynomial> {
        if self.modulus != 0 {
            return Err(Error::ModulusSet(self.modulus));
        }
        match k {
            0 => Ok(self.clone()),
            1 => Err(Error::TrivialModulus),
            _ => {
                let mut out = Self::zero(self.rank, k)?;
                for (e, c) in &self.terms {
                    out.add_term(e.clone(), c.clone());
                }
                Ok(out)
            }
        }
    }

    fn assert_compatible(&self, rhs: &LaurentPolynomial) {
        assert_eq!(self.rank, rhs.rank, "laurent rank mismatch");
        assert_eq!(self.modulus, rhs.modulus, "laurent modulus mismatch");
    }
}

fn canon(modulus: u64, c: BigInt) -> BigInt {
    if modulus >= 2 {
        let m = BigInt::from(modulus);
        ((c % &m) + &m) % &m
    } else {
        c
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    // exponents add under monomial multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.assert_compatible(rhs);
        let mut out = LaurentPolynomial {
            rank: self.rank,
            modulus: self.modulus,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<i64> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial {
            rank: self.rank,
            modulus: self.modulus,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Deterministic text form: terms in descending lexicographic order of
/// exponent vectors, monomials written `t<i>^<e>` with `^1` omitted,
/// e.g. `1 - 2*t1^-1*t2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(rank: usize, modulus: u64, exps: &[i64], c: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(rank, modulus, exps.to_vec(), c).unwrap()
    }

    #[test]
    fn modulus_one_rejected() {
        assert_eq!(
            LaurentPolynomial::zero(2, 1).unwrap_err(),
            Error::TrivialModulus
        );
        let p = LaurentPolynomial::one(2, 0).unwrap();
        assert_eq!(p.reduce_mod(1).unwrap_err(), Error::TrivialModulus);
    }

    #[test]
    fn reduce_mod_examples() {
        // 2*t1 mod 2 = 0
        let p = mono(2, 0, &[1, 0], 2);
        assert!(p.reduce_mod(2).unwrap().is_zero());
        // (3 + t2^-1) mod 2 = 1 + t2^-1
        let p = mono(2, 0, &[0, 0], 3) + mono(2, 0, &[0, -1], 1);
        let q = p.reduce_mod(2).unwrap();
        assert_eq!(q, &mono(2, 2, &[0, 0], 1) + &mono(2, 2, &[0, -1], 1));
        // k = 0 is the identity
        assert_eq!(p.reduce_mod(0).unwrap(), p);
        // already-reduced input is rejected
        assert_eq!(q.reduce_mod(2).unwrap_err(), Error::ModulusSet(2));
    }

    #[test]
    fn canonical_coefficients_mod_k() {
        // -1 mod 3 is stored as 2
        let p = mono(1, 3, &[0], -1);
        assert_eq!(p.coefficient(&[0]), BigInt::from(2));
        // 3 mod 3 vanishes
        assert!(mono(1, 3, &[5], 3).is_zero());
    }

    #[test]
    fn ring_operations() {
        let a = &mono(2, 0, &[1, 0], 2) + &mono(2, 0, &[0, 0], 1); // 2*t1 + 1
        let b = mono(2, 0, &[-1, 1], 1); // t1^-1*t2
        let prod = &a * &b;
        assert_eq!(prod.coefficient(&[0, 1]), BigInt::from(2));
        assert_eq!(prod.coefficient(&[-1, 1]), BigInt::from(1));
        assert_eq!(prod.term_count(), 2);
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &(-&a), LaurentPolynomial::zero(2, 0).unwrap());
    }

    #[test]
    fn mul_monomial_shifts_exponents() {
        let a = mono(2, 0, &[1, -1], 3);
        let shifted = a.mul_monomial(&[2, 2], &BigInt::from(-1));
        assert_eq!(shifted.coefficient(&[3, 1]), BigInt::from(-3));
    }

    #[test]
    fn display_format() {
        // 1 - 2*t1^-1*t2
        let p = &mono(2, 0, &[0, 0], 1) - &mono(2, 0, &[-1, 1], 2);
        assert_eq!(p.to_string(), "1 - 2*t1^-1*t2");
        let q = &mono(2, 0, &[0, 0], 1) + &mono(2, 0, &[0, -1], 1);
        assert_eq!(q.to_string(), "1 + t2^-1");
        assert_eq!(LaurentPolynomial::zero(3, 0).unwrap().to_string(), "0");
        assert_eq!(mono(1, 0, &[1], -1).to_string(), "-t1");
    }
}
