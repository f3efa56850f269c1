//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical: the vector is empty for the zero polynomial and the last entry
//! is nonzero otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// c * x^deg.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        Self::from_coeffs(coeffs)
    }

    /// Construct from ascending-degree coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content and force a positive leading coefficient.
    /// The zero polynomial maps to itself.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading_coefficient().unwrap().is_negative() {
            content = -content;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division: returns `None` unless `self = q * d` over Z.
    pub fn exact_div(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dn, dd) = (self.degree()?, d.degree()?);
        if dn < dd {
            return None;
        }
        let lead = d.leading_coefficient().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (dd..=dn).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(d)^(deg f - deg d + 1) * f` by `d`.
    fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lead = d.leading_coefficient().unwrap().clone();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading_coefficient().unwrap().clone();
            rem = rem.scale(&lead) - d.scale(&c).shift(dr - dd);
        }
        rem
    }

    /// Multiply by x^k.
    fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }
}

/// Primitive greatest common divisor with positive leading coefficient.
///
/// Contents are dropped: the result is the primitive part of the gcd of the
/// primitive parts. `poly_gcd(0, f)` is the primitive part of `f`.
pub fn poly_gcd(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    if f.is_zero() {
        return g.primitive_part();
    }
    if g.is_zero() {
        return f.primitive_part();
    }
    // Primitive polynomial remainder sequence.
    let mut a = f.primitive_part();
    let mut b = g.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    a.primitive_part()
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            match deg {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag.is_one() => write!(f, "x^{deg}")?,
                _ => write!(f, "{mag}*x^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn canonical_form() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let f = p(&[1, 2]); // 1 + 2x
        let g = p(&[-1, 1]); // x - 1
        assert_eq!(&f + &g, p(&[0, 3]));
        assert_eq!(&f - &f, IntPolynomial::zero());
        assert_eq!(&f * &g, p(&[-1, -1, 2]));
        assert_eq!(f.evaluate(&BigInt::from(3)), BigInt::from(7));
    }

    #[test]
    fn exact_division() {
        // (x - 1)(x + 1) = x^2 - 1
        let f = p(&[-1, 0, 1]);
        let d = p(&[-1, 1]);
        assert_eq!(f.exact_div(&d), Some(p(&[1, 1])));
        // x^2 - 3x + 1 is not divisible by x - 1
        assert_eq!(p(&[1, -3, 1]).exact_div(&d), None);
    }

    #[test]
    fn gcd_splits_difference_of_squares() {
        // gcd(x^2 - 1, x - 1) = x - 1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        // x^2 - 3x + 1 has no rational roots, so the gcd with x - 1 is constant;
        // the rational Euclidean algorithm (clear denominators) gives 1.
        assert_eq!(
            poly_gcd(&p(&[1, -3, 1]), &p(&[-1, 1])),
            IntPolynomial::one()
        );
    }

    #[test]
    fn gcd_with_zero_is_primitive_part() {
        // gcd(0, 2x + 2) = x + 1
        assert_eq!(poly_gcd(&IntPolynomial::zero(), &p(&[2, 2])), p(&[1, 1]));
        assert_eq!(poly_gcd(&p(&[-2, -2]), &IntPolynomial::zero()), p(&[1, 1]));
    }

    #[test]
    fn primitive_part_normalizes_sign() {
        assert_eq!(p(&[2, -4]).primitive_part(), p(&[-1, 2]));
        assert_eq!(
            IntPolynomial::zero().primitive_part(),
            IntPolynomial::zero()
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2 - 3*x + 1");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[0, 0, -2]).to_string(), "-2*x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[5]).to_string(), "5");
    }
}
