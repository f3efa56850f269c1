//! Element arithmetic in the wreath product of a cyclic group of order k
//! with the integers: pairs (f, s) of a finitely supported function
//! f: Z -> Z/kZ and a shift s, multiplied by
//!
//! ```text
//! (f, s)(g, t) = (f + s.g, s + t),   (s.g)(p) = g(p - s).
//! ```
//!
//! The two standard generators are the lamp a = (delta_0, 0) and the
//! translation b = (0, 1). Iterated commutators against b never die: their
//! supports are rows of Pascal's triangle mod k, whose extreme entries are
//! always 1, which makes the group a witness of non-nilpotency.

use crate::error::{Error, Result};
use crate::words::Word;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WreathElement {
    base: u64,
    support: BTreeMap<i64, u64>,
    shift: i64,
}

impl WreathElement {
    pub fn identity(base: u64) -> Result<Self> {
        if base < 2 {
            return Err(Error::BaseTooSmall { got: base });
        }
        Ok(WreathElement {
            base,
            support: BTreeMap::new(),
            shift: 0,
        })
    }

    /// The generator a = (delta_0, 0).
    pub fn lamp(base: u64) -> Result<Self> {
        let mut el = Self::identity(base)?;
        el.support.insert(0, 1);
        Ok(el)
    }

    /// The generator b = (0, 1).
    pub fn translation(base: u64) -> Result<Self> {
        let mut el = Self::identity(base)?;
        el.shift = 1;
        Ok(el)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn support(&self) -> &BTreeMap<i64, u64> {
        &self.support
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty() && self.shift == 0
    }

    fn add_at(&mut self, pos: i64, value: u64) {
        let sum = (self.support.get(&pos).copied().unwrap_or(0) + value) % self.base;
        if sum == 0 {
            self.support.remove(&pos);
        } else {
            self.support.insert(pos, sum);
        }
    }

    pub fn mul(&self, rhs: &WreathElement) -> Result<WreathElement> {
        if self.base != rhs.base {
            return Err(Error::BaseMismatch {
                left: self.base,
                right: rhs.base,
            });
        }
        let mut out = self.clone();
        out.shift += rhs.shift;
        for (&pos, &value) in &rhs.support {
            out.add_at(pos + self.shift, value);
        }
        Ok(out)
    }

    /// (f, s)^-1 = (-f shifted by -s, -s).
    pub fn inverse(&self) -> WreathElement {
        let mut out = WreathElement {
            base: self.base,
            support: BTreeMap::new(),
            shift: -self.shift,
        };
        for (&pos, &value) in &self.support {
            out.support.insert(pos - self.shift, self.base - value);
        }
        out
    }

    pub fn pow(&self, e: i64) -> WreathElement {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = WreathElement {
            base: self.base,
            support: BTreeMap::new(),
            shift: 0,
        };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base).expect("equal bases");
        }
        out
    }

    /// `[self, rhs] = self^-1 rhs^-1 self rhs`.
    pub fn commutator(&self, rhs: &WreathElement) -> Result<WreathElement> {
        self.inverse().mul(&rhs.inverse())?.mul(self)?.mul(rhs)
    }

    pub fn to_json(&self) -> Value {
        let support: BTreeMap<String, u64> = self
            .support
            .iter()
            .map(|(pos, value)| (pos.to_string(), *value))
            .collect();
        json!({ "k": self.base, "shift": self.shift, "support": support })
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.support.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (pos, value)) in self.support.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if *value == 1 {
                    write!(f, "d[{pos}]")?;
                } else {
                    write!(f, "{value}*d[{pos}]")?;
                }
            }
        }
        write!(f, ", {})", self.shift)
    }
}

/// The depth-c term of the lower central series chain c_1 = a,
/// c_{j+1} = [c_j, b]. Its support is a signed row of Pascal's triangle
/// mod k, so it is never the identity.
pub fn lcs_witness(base: u64, depth: i64) -> Result<WreathElement> {
    if depth < 1 {
        return Err(Error::NonPositive {
            name: "depth",
            got: depth,
        });
    }
    let b = WreathElement::translation(base)?;
    let mut witness = WreathElement::lamp(base)?;
    for _ in 1..depth {
        witness = witness.commutator(&b)?;
    }
    assert!(
        !witness.is_identity(),
        "lower central series witness vanished at depth {depth}"
    );
    Ok(witness)
}

/// Image of a word under x1 -> a, x2 -> b, x_i -> identity for i >= 3.
/// This is the evaluation homomorphism onto the 2-generated wreath product.
pub fn eval_in_wreath(w: &Word, base: u64) -> Result<WreathElement> {
    let a = WreathElement::lamp(base)?;
    let b = WreathElement::translation(base)?;
    let mut acc = WreathElement::identity(base)?;
    for letter in w.letters() {
        let image = match letter.generator() {
            1 => &a,
            2 => &b,
            _ => continue,
        };
        let factor = if letter.is_inverse() {
            image.inverse()
        } else {
            image.clone()
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn element(base: u64, shift: i64, support: &[(i64, u64)]) -> WreathElement {
        let mut el = WreathElement::identity(base).unwrap();
        el.shift = shift;
        for &(pos, value) in support {
            el.add_at(pos, value);
        }
        el
    }

    #[test]
    fn lamp_squares_to_identity_mod_2() {
        let a = WreathElement::lamp(2).unwrap();
        assert!(a.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn conjugating_the_lamp_moves_it() {
        let a = WreathElement::lamp(3).unwrap();
        let b = WreathElement::translation(3).unwrap();
        for s in -3..=3i64 {
            let conj = b.pow(s).mul(&a).unwrap().mul(&b.pow(-s)).unwrap();
            assert_eq!(conj, element(3, 0, &[(s, 1)]), "s = {s}");
        }
    }

    #[test]
    fn inverse_law() {
        for x in [
            element(5, 3, &[(0, 2), (-4, 1), (7, 4)]),
            element(2, -2, &[(1, 1)]),
            WreathElement::identity(3).unwrap(),
        ] {
            assert!(x.mul(&x.inverse()).unwrap().is_identity());
            assert!(x.inverse().mul(&x).unwrap().is_identity());
        }
    }

    #[test]
    fn base_mismatch_and_small_base_are_rejected() {
        let a = WreathElement::lamp(2).unwrap();
        let b = WreathElement::lamp(3).unwrap();
        assert_eq!(
            a.mul(&b).unwrap_err(),
            Error::BaseMismatch { left: 2, right: 3 }
        );
        assert_eq!(
            WreathElement::identity(1).unwrap_err(),
            Error::BaseTooSmall { got: 1 }
        );
        assert_eq!(
            WreathElement::identity(0).unwrap_err(),
            Error::BaseTooSmall { got: 0 }
        );
    }

    #[test]
    fn lcs_witness_examples() {
        assert_eq!(lcs_witness(2, 1).unwrap(), WreathElement::lamp(2).unwrap());

        let c2 = lcs_witness(2, 2).unwrap();
        assert_eq!(c2, element(2, 0, &[(-1, 1), (0, 1)]));

        // Fourth finite difference of delta_0 mod 3: binomials 1,3,3,1.
        let c4 = lcs_witness(3, 4).unwrap();
        assert_eq!(c4, element(3, 0, &[(-3, 1), (0, 2)]));
    }

    #[test]
    fn lcs_witness_supports_follow_pascal_rows() {
        for k in [2u64, 3, 5] {
            for depth in 1..=12i64 {
                let w = lcs_witness(k, depth).unwrap();
                assert!(!w.is_identity(), "k={k} depth={depth}");
                assert_eq!(w.shift(), 0);
                let row = depth - 1;
                let mut binom = 1u64;
                for i in 0..=row {
                    // C(row, i) alternating in sign
                    let value = if (row - i) % 2 == 0 {
                        binom % k
                    } else {
                        (k - binom % k) % k
                    };
                    assert_eq!(
                        w.support().get(&(-i)).copied().unwrap_or(0),
                        value,
                        "k={k} depth={depth} position {}",
                        -i
                    );
                    binom = binom * (row - i) as u64 / (i + 1) as u64;
                }
            }
        }
    }

    #[test]
    fn eval_examples() {
        for k in [2u64, 3, 5] {
            let w = parse_word(&format!("x1^{k}"), 2).unwrap();
            assert!(eval_in_wreath(&w, k).unwrap().is_identity());
        }

        let comm = parse_word("[x1,x2]", 2).unwrap();
        let image = eval_in_wreath(&comm, 3).unwrap();
        assert_eq!(image.support().len(), 2);
        assert_eq!(image.shift(), 0);

        let square = parse_word("[[x1,x2],[x1,x2]]", 2).unwrap();
        assert!(eval_in_wreath(&square, 3).unwrap().is_identity());
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let pairs = [
            ("x1 x2", "x2^-1 x1"),
            ("[x1,x2] x2", "x1^-3"),
            ("(x1 x2)^2", "[x2,x1]"),
        ];
        for (u_text, v_text) in pairs {
            let u = parse_word(u_text, 2).unwrap();
            let v = parse_word(v_text, 2).unwrap();
            let uv = u.concat(&v).unwrap();
            assert_eq!(
                eval_in_wreath(&uv, 5).unwrap(),
                eval_in_wreath(&u, 5)
                    .unwrap()
                    .mul(&eval_in_wreath(&v, 5).unwrap())
                    .unwrap()
            );
        }
    }

    #[test]
    fn binomial_overflow_guard() {
        // depth 25 needs C(24, 12) = 2704156, well inside u64
        let w = lcs_witness(2, 25).unwrap();
        assert!(!w.is_identity());
    }
}
