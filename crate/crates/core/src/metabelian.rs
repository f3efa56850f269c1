//! Canonical forms for free metabelian groups via free differential calculus.
//!
//! A word w in F_n is represented by the pair (ab, fox): its exponent-sum
//! vector and its n Fox derivatives evaluated in the group ring of the free
//! abelian group, with coefficients in Z (modulus 0) or Z/kZ (modulus k >= 2).
//! Two words represent the same element of the free metabelian group F_n/F''
//! exactly when their pairs agree; with mod-k coefficients the same pair
//! decides membership in the kernel of F_n -> F_n/(F')^k F''. The derivative
//! rules are d(x_i)/dx_j = delta_ij, d(x_i^-1)/dx_i = -t_i^-1, and the
//! product rule d(uv)/dx = du/dx + u_ab * dv/dx with u_ab the abelianized
//! prefix as a monomial.

use crate::arith::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::words::Word;
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

/// The n Fox derivatives of a reduced word, as Laurent polynomials in the
/// commuting images t_1..t_n of the generators.
pub fn fox_derivatives(w: &Word, modulus: u64) -> Result<Vec<LaurentPolynomial>> {
    let n = w.rank();
    let mut fox = Vec::with_capacity(n);
    for _ in 0..n {
        fox.push(LaurentPolynomial::zero(n, modulus)?);
    }
    let mut prefix = vec![0i64; n];
    for letter in w.letters() {
        let i = letter.generator() - 1;
        if letter.is_inverse() {
            prefix[i] -= 1;
            fox[i].add_term(prefix.clone(), BigInt::from(-1));
        } else {
            fox[i].add_term(prefix.clone(), BigInt::one());
            prefix[i] += 1;
        }
    }
    Ok(fox)
}

/// Canonical form of a free-group element modulo the second derived
/// subgroup (and modulo k-th powers of the derived subgroup when the
/// modulus is k >= 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnusElement {
    rank: usize,
    modulus: u64,
    ab: Vec<i64>,
    fox: Vec<LaurentPolynomial>,
}

impl MagnusElement {
    pub fn identity(rank: usize, modulus: u64) -> Result<Self> {
        Ok(MagnusElement {
            rank,
            modulus,
            ab: vec![0; rank],
            fox: fox_derivatives(&Word::identity(rank), modulus)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ab(&self) -> &[i64] {
        &self.ab
    }

    pub fn fox(&self) -> &[LaurentPolynomial] {
        &self.fox
    }

    /// Group law: (ab, fox)(ab', fox') = (ab + ab', fox + t^ab * fox').
    pub fn mul(&self, rhs: &MagnusElement) -> MagnusElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let ab: Vec<i64> = self.ab.iter().zip(&rhs.ab).map(|(a, b)| a + b).collect();
        let one = BigInt::one();
        let fox = self
            .fox
            .iter()
            .zip(&rhs.fox)
            .map(|(f, g)| f + &g.mul_monomial(&self.ab, &one))
            .collect();
        MagnusElement {
            rank: self.rank,
            modulus: self.modulus,
            ab,
            fox,
        }
    }

    pub fn inverse(&self) -> MagnusElement {
        let neg_ab: Vec<i64> = self.ab.iter().map(|a| -a).collect();
        let minus_one = BigInt::from(-1);
        let fox = self
            .fox
            .iter()
            .map(|f| f.mul_monomial(&neg_ab, &minus_one))
            .collect();
        MagnusElement {
            rank: self.rank,
            modulus: self.modulus,
            ab: neg_ab,
            fox,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.ab.iter().all(|&a| a == 0) && self.fox.iter().all(LaurentPolynomial::is_zero)
    }

    /// Sum_i fox_i * (t_i - 1) = t^ab - 1, the identity characterizing
    /// genuine derivative vectors.
    pub fn satisfies_fox_identity(&self) -> bool {
        let mut lhs = LaurentPolynomial::zero(self.rank, self.modulus).unwrap();
        let one = BigInt::one();
        for (i, f) in self.fox.iter().enumerate() {
            let mut shift = vec![0i64; self.rank];
            shift[i] = 1;
            lhs = &lhs + &(&f.mul_monomial(&shift, &one) - f);
        }
        let rhs = &LaurentPolynomial::monomial(self.rank, self.modulus, self.ab.clone(), 1)
            .unwrap()
            - &LaurentPolynomial::one(self.rank, self.modulus).unwrap();
        lhs == rhs
    }

    pub fn verdict(&self) -> VerbalVerdict {
        if self.ab.iter().any(|&a| a != 0) {
            return VerbalVerdict {
                in_subgroup: false,
                failing_coordinate: Some(FailingCoordinate::Abelianization),
            };
        }
        match self.fox.iter().position(|f| !f.is_zero()) {
            Some(i) => VerbalVerdict {
                in_subgroup: false,
                failing_coordinate: Some(FailingCoordinate::Fox(i + 1)),
            },
            None => VerbalVerdict {
                in_subgroup: true,
                failing_coordinate: None,
            },
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "modulus": self.modulus,
            "ab": self.ab,
            "fox": self.fox.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The canonical form of `w` with coefficients mod `modulus`.
pub fn magnus(w: &Word, modulus: u64) -> Result<MagnusElement> {
    let el = MagnusElement {
        rank: w.rank(),
        modulus,
        ab: w.abelianize(),
        fox: fox_derivatives(w, modulus)?,
    };
    debug_assert!(el.satisfies_fox_identity());
    Ok(el)
}

/// Outcome of a verbal-subgroup membership test, with the first coordinate
/// of the canonical form that witnesses failure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FailingCoordinate {
    Abelianization,
    Fox(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VerbalVerdict {
    pub in_subgroup: bool,
    pub failing_coordinate: Option<FailingCoordinate>,
}

impl VerbalVerdict {
    pub fn to_json(&self) -> Value {
        let failing = match self.failing_coordinate {
            None => Value::Null,
            Some(FailingCoordinate::Abelianization) => json!("abelianization"),
            Some(FailingCoordinate::Fox(i)) => json!({ "fox": i }),
        };
        json!({ "trivial": self.in_subgroup, "failing_coordinate": failing })
    }
}

/// Is `w` trivial in the free metabelian group (modulus 0), or in the
/// mod-k quotient (modulus k >= 2)?
pub fn is_trivial(w: &Word, modulus: u64) -> Result<VerbalVerdict> {
    Ok(magnus(w, modulus)?.verdict())
}

/// For a word nontrivial in the free metabelian group of rank >= 2, find a
/// generator it fails to commute with. One always exists: the center of the
/// free metabelian group of rank >= 2 is trivial.
pub fn center_witness(w: &Word) -> Result<usize> {
    let n = w.rank();
    if n < 2 {
        return Err(Error::RankTooSmall { min: 2, got: n });
    }
    if is_trivial(w, 0)?.in_subgroup {
        return Err(Error::TrivialWord);
    }
    for i in 1..=n {
        let xi = Word::generator(n, i)?;
        if !is_trivial(&w.commutator(&xi)?, 0)?.in_subgroup {
            return Ok(i);
        }
    }
    unreachable!("nontrivial element commuting with every generator");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use proptest::prelude::*;

    fn poly(rank: usize, modulus: u64, terms: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            rank,
            modulus,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn fox_derivative_examples() {
        let fox = fox_derivatives(&parse_word("x1 x2", 2).unwrap(), 0).unwrap();
        assert_eq!(fox[0], poly(2, 0, &[(&[0, 0], 1)]));
        assert_eq!(fox[1], poly(2, 0, &[(&[1, 0], 1)]));

        let fox = fox_derivatives(&parse_word("x1^-1", 1).unwrap(), 0).unwrap();
        assert_eq!(fox[0], poly(1, 0, &[(&[-1], -1)]));

        let fox = fox_derivatives(&Word::identity(2), 0).unwrap();
        assert!(fox.iter().all(LaurentPolynomial::is_zero));
    }

    #[test]
    fn fox_derivatives_of_commutator() {
        // [x1,x2] = x1^-1 x2^-1 x1 x2, derivatives worked out by the
        // prefix rule one letter at a time.
        let fox = fox_derivatives(&parse_word("[x1,x2]", 2).unwrap(), 0).unwrap();
        assert_eq!(fox[0], poly(2, 0, &[(&[-1, -1], 1), (&[-1, 0], -1)]));
        assert_eq!(fox[1], poly(2, 0, &[(&[0, -1], 1), (&[-1, -1], -1)]));
    }

    #[test]
    fn modulus_one_is_rejected() {
        let w = parse_word("x1", 1).unwrap();
        assert_eq!(fox_derivatives(&w, 1).unwrap_err(), Error::TrivialModulus);
        assert_eq!(magnus(&w, 1).unwrap_err(), Error::TrivialModulus);
        assert_eq!(is_trivial(&w, 1).unwrap_err(), Error::TrivialModulus);
    }

    #[test]
    fn magnus_identity_and_inverse() {
        assert!(MagnusElement::identity(3, 0).unwrap().is_identity());
        for text in ["x1 x2^-1 x1", "[x1,x2] x3^2", "(x1 x3)^-2 x2"] {
            let w = parse_word(text, 3).unwrap();
            for modulus in [0u64, 2, 5] {
                let el = magnus(&w, modulus).unwrap();
                assert!(el.mul(&el.inverse()).is_identity(), "{text} mod {modulus}");
                assert!(el.inverse().mul(&el).is_identity(), "{text} mod {modulus}");
            }
        }
    }

    #[test]
    fn magnus_of_commutator_kills_ab_not_fox() {
        let el = magnus(&parse_word("[x1,x2]", 2).unwrap(), 0).unwrap();
        assert_eq!(el.ab(), &[0, 0]);
        assert!(el.fox().iter().any(|f| !f.is_zero()));
    }

    #[test]
    fn triviality_examples() {
        let v = is_trivial(&parse_word("[[x1,x2],[x1,x2^-1]]", 2).unwrap(), 0).unwrap();
        assert!(v.in_subgroup);
        assert_eq!(v.failing_coordinate, None);

        let v = is_trivial(&parse_word("[x1,x2]", 2).unwrap(), 0).unwrap();
        assert!(!v.in_subgroup);
        assert_eq!(v.failing_coordinate, Some(FailingCoordinate::Fox(1)));

        let v = is_trivial(&parse_word("[x1,x2]^3", 2).unwrap(), 3).unwrap();
        assert!(v.in_subgroup);

        let v = is_trivial(&parse_word("[x1,x2]^3", 2).unwrap(), 0).unwrap();
        assert!(!v.in_subgroup);

        let v = is_trivial(&parse_word("x1^2", 2).unwrap(), 2).unwrap();
        assert!(!v.in_subgroup);
        assert_eq!(
            v.failing_coordinate,
            Some(FailingCoordinate::Abelianization)
        );
    }

    #[test]
    fn center_witness_examples() {
        assert_eq!(center_witness(&parse_word("x1", 2).unwrap()).unwrap(), 2);
        assert_eq!(center_witness(&parse_word("x2", 2).unwrap()).unwrap(), 1);

        let w = parse_word("[x1,x2]", 2).unwrap();
        let i = center_witness(&w).unwrap();
        assert!(i == 1 || i == 2);
        let xi = Word::generator(2, i).unwrap();
        assert!(
            !is_trivial(&w.commutator(&xi).unwrap(), 0)
                .unwrap()
                .in_subgroup
        );
    }

    #[test]
    fn center_witness_rejects_bad_input() {
        assert_eq!(
            center_witness(&Word::identity(2)).unwrap_err(),
            Error::TrivialWord
        );
        assert_eq!(
            center_witness(&parse_word("[[x1,x2],[x1,x2^-1]]", 2).unwrap()).unwrap_err(),
            Error::TrivialWord
        );
        assert_eq!(
            center_witness(&parse_word("x1", 1).unwrap()).unwrap_err(),
            Error::RankTooSmall { min: 2, got: 1 }
        );
    }

    fn arb_word(rank: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec((1..=rank, proptest::bool::ANY), 0..16).prop_map(move |raw| {
            Word::from_letters(
                rank,
                raw.into_iter()
                    .map(|(g, inv)| crate::words::Letter::new(g, inv)),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn magnus_is_a_homomorphism(
            u in arb_word(3),
            v in arb_word(3),
            modulus in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)],
        ) {
            let uv = u.concat(&v).unwrap();
            let lhs = magnus(&uv, modulus).unwrap();
            let rhs = magnus(&u, modulus).unwrap().mul(&magnus(&v, modulus).unwrap());
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(lhs.satisfies_fox_identity());
        }

        #[test]
        fn metabelian_law_holds(
            a in arb_word(3),
            b in arb_word(3),
            c in arb_word(3),
            d in arb_word(3),
        ) {
            let inner1 = a.commutator(&b).unwrap();
            let inner2 = c.commutator(&d).unwrap();
            let law = inner1.commutator(&inner2).unwrap();
            prop_assert!(is_trivial(&law, 0).unwrap().in_subgroup);
        }

        #[test]
        fn exponent_law_holds_mod_k(
            a in arb_word(2),
            b in arb_word(2),
            k in prop_oneof![Just(2u64), Just(3), Just(5)],
        ) {
            let power = a.commutator(&b).unwrap().pow(k as i64);
            prop_assert!(is_trivial(&power, k).unwrap().in_subgroup);
        }

        #[test]
        fn triviality_is_conjugation_invariant(w in arb_word(3), g in arb_word(3)) {
            let conj = w.conjugated_by(&g).unwrap();
            prop_assert_eq!(
                is_trivial(&w, 0).unwrap().in_subgroup,
                is_trivial(&conj, 0).unwrap().in_subgroup
            );
        }
    }
}
