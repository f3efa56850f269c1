//! Randomized sweeps of the algebraic laws each module promises, at scales
//! too large for inline unit tests. All randomness is seeded, so failures
//! reproduce deterministically.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relfree::arith::{poly_gcd, IntPolynomial, LaurentPolynomial};
use relfree::grpext::{SemidirectElement, WreathElement};
use relfree::intlinalg::{
    elementary_decomposition, lattice_index, smith_normal_form, ElementaryMove, IntMatrix,
    LatticeIndex,
};
use relfree::metabelian::magnus;
use relfree::spectra::spectrum_free_automorphism;
use relfree::words::{free_reduce, Letter, Word};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> IntPolynomial {
    let degree = rng.gen_range(0..=max_degree);
    IntPolynomial::from_coeffs(
        (0..=degree)
            .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

fn random_laurent(rng: &mut ChaCha8Rng, rank: usize, modulus: u64) -> LaurentPolynomial {
    let terms = rng.gen_range(0..=4);
    LaurentPolynomial::from_terms(
        rank,
        modulus,
        (0..terms).map(|_| {
            let exps: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
            (exps, BigInt::from(rng.gen_range(-9..=9i64)))
        }),
    )
    .unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        rank,
        (0..len).map(|_| Letter::new(rng.gen_range(1..=rank), rng.gen())),
    )
    .unwrap()
}

fn random_move(rng: &mut ChaCha8Rng, n: usize) -> ElementaryMove {
    match rng.gen_range(0..4) {
        0 | 1 => {
            let target = rng.gen_range(0..n);
            let mut source = rng.gen_range(0..n - 1);
            if source >= target {
                source += 1;
            }
            let factor = if rng.gen() { 1 } else { -1 };
            ElementaryMove::add_multiple(target, source, factor)
        }
        2 => {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            ElementaryMove::Swap { a, b }
        }
        _ => ElementaryMove::Negate {
            row: rng.gen_range(0..n),
        },
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, moves: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..moves {
        m = &m * &random_move(rng, n).matrix(n);
    }
    m
}

#[test]
fn laurent_ring_axioms() {
    let mut rng = rng(11);
    for round in 0..10_000 {
        let modulus = [0u64, 5][round % 2];
        let f = random_laurent(&mut rng, 2, modulus);
        let g = random_laurent(&mut rng, 2, modulus);
        let h = random_laurent(&mut rng, 2, modulus);
        assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h), "distributivity");
        assert_eq!(&f * &g, &g * &f, "commutativity");
    }
}

#[test]
fn poly_gcd_division_properties() {
    let mut rng = rng(13);
    for _ in 0..300 {
        let a = random_poly(&mut rng, 4, 5);
        let b = random_poly(&mut rng, 4, 5);
        let c = random_poly(&mut rng, 3, 5).primitive_part();
        if c.degree().is_none() {
            continue;
        }
        let f = &a * &c;
        let g = &b * &c;
        let d = poly_gcd(&f, &g);
        if f.degree().is_some() {
            assert!(f.exact_div(&d).is_some(), "gcd must divide f");
        }
        if g.degree().is_some() {
            assert!(g.exact_div(&d).is_some(), "gcd must divide g");
        }
        if f.degree().is_some() || g.degree().is_some() {
            assert!(d.exact_div(&c).is_some(), "common divisor must divide gcd");
        }
    }
}

#[test]
fn laurent_reduction_is_multiplicative() {
    let mut rng = rng(17);
    for _ in 0..2_000 {
        let p = random_laurent(&mut rng, 2, 0);
        let q = random_laurent(&mut rng, 2, 0);
        for k in [2u64, 3, 5] {
            let lhs = (&p * &q).reduce_mod(k).unwrap();
            let rhs = &p.reduce_mod(k).unwrap() * &q.reduce_mod(k).unwrap();
            assert_eq!(lhs, rhs, "mod {k}");
        }
    }
}

#[test]
fn smith_normal_form_random_sweep() {
    let mut rng = rng(19);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let m = random_matrix(&mut rng, n, 9);
        let d = smith_normal_form(&m);
        let product = &(d.u() * &m) * d.v();
        assert_eq!(&product, d.s(), "u*m*v = s");
        assert!(d.u().is_unimodular());
        assert!(d.v().is_unimodular());
        let mut prev: Option<BigInt> = None;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert!(d.s()[(i, j)].is_zero(), "off-diagonal entry");
                }
            }
            let di = d.s()[(i, i)].clone();
            assert!(!di.is_negative());
            if let Some(p) = prev {
                if !di.is_zero() {
                    assert!(!p.is_zero() && (&di % &p).is_zero(), "divisibility chain");
                }
            }
            prev = Some(di);
        }
        assert_eq!(d.s().determinant().abs(), m.determinant().abs());
    }
}

#[test]
fn char_poly_random_properties() {
    let mut rng = rng(23);
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=6);
        let m = random_matrix(&mut rng, n, 9);
        let p = m.char_poly();
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(n));
        let at_zero = p.evaluate(&BigInt::zero());
        let signed_det = if n % 2 == 0 {
            m.determinant()
        } else {
            -m.determinant()
        };
        assert_eq!(at_zero, signed_det, "p(0) = (-1)^n det");
    }
    for _ in 0..500 {
        let degree = rng.gen_range(1..=6);
        let mut coeffs: Vec<BigInt> = (0..degree)
            .map(|_| BigInt::from(rng.gen_range(-9..=9i64)))
            .collect();
        coeffs.push(BigInt::one());
        let p = IntPolynomial::from_coeffs(coeffs);
        let companion = IntMatrix::companion(&p).unwrap();
        assert_eq!(companion.char_poly(), p, "companion round trip");
    }
}

#[test]
fn lattice_index_matches_determinant() {
    let mut rng = rng(29);
    for _ in 0..2_000 {
        let n = rng.gen_range(1..=5);
        let m = random_matrix(&mut rng, n, 6);
        let det = m.determinant();
        match lattice_index(&m) {
            LatticeIndex::Finite(idx) => assert_eq!(idx, det.abs()),
            LatticeIndex::Infinite => assert!(det.is_zero()),
        }
    }
}

#[test]
fn elementary_decomposition_round_trips() {
    let mut rng = rng(31);
    for _ in 0..500 {
        let n = rng.gen_range(2..=5);
        let moves = rng.gen_range(0..=30);
        let m = random_unimodular(&mut rng, n, moves);
        let seq = elementary_decomposition(&m).unwrap();
        assert_eq!(seq.product(), m);
    }
}

#[test]
fn word_laws_random_sweep() {
    let mut rng = rng(37);
    for _ in 0..10_000 {
        let u = random_word(&mut rng, 4, 20);
        let v = random_word(&mut rng, 4, 20);
        let sum: Vec<i64> = u
            .abelianize()
            .iter()
            .zip(v.abelianize())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(u.concat(&v).unwrap().abelianize(), sum);
        let inv = u.inverse();
        let letters = u.letters().iter().chain(inv.letters()).copied();
        assert!(free_reduce(letters).is_empty());
    }
}

#[test]
fn magnus_respects_splices_and_conjugation() {
    let mut rng = rng(41);
    for _ in 0..1_000 {
        let w = random_word(&mut rng, 3, 14);
        // splice a cancelling pair into a random spot
        let mut letters: Vec<Letter> = w.letters().to_vec();
        let at = rng.gen_range(0..=letters.len());
        let noise = Letter::new(rng.gen_range(1..=3), rng.gen());
        letters.splice(at..at, [noise, noise.inverted()]);
        let spliced = Word::from_letters(3, letters).unwrap();
        assert_eq!(magnus(&w, 0).unwrap(), magnus(&spliced, 0).unwrap());

        let g = random_word(&mut rng, 3, 10);
        let conj = w.conjugated_by(&g).unwrap();
        assert_eq!(
            magnus(&w, 0).unwrap().verdict().in_subgroup,
            magnus(&conj, 0).unwrap().verdict().in_subgroup
        );
    }
}

#[test]
fn wreath_group_axioms() {
    let mut rng = rng(43);
    let random_element = |rng: &mut ChaCha8Rng, k: u64| {
        let mut el = WreathElement::identity(k).unwrap();
        let lamp_count = rng.gen_range(0..=4);
        for _ in 0..lamp_count {
            let pos = rng.gen_range(-5..=5);
            let b = WreathElement::translation(k).unwrap().pow(pos);
            let conj = b
                .mul(&WreathElement::lamp(k).unwrap())
                .unwrap()
                .mul(&b.inverse())
                .unwrap();
            el = el.mul(&conj.pow(rng.gen_range(1..=k as i64 - 1))).unwrap();
        }
        el.mul(
            &WreathElement::translation(k)
                .unwrap()
                .pow(rng.gen_range(-4..=4)),
        )
        .unwrap()
    };
    for _ in 0..10_000 {
        let k = [2u64, 3, 5][rng.gen_range(0..3)];
        let a = random_element(&mut rng, k);
        let b = random_element(&mut rng, k);
        let c = random_element(&mut rng, k);
        assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap(),
            "associativity"
        );
        assert!(a.mul(&a.inverse()).unwrap().is_identity());
    }
}

#[test]
fn semidirect_group_axioms() {
    let mut rng = rng(47);
    for n in [2usize, 3] {
        let phi = spectrum_free_automorphism(n).unwrap();
        let random_element = |rng: &mut ChaCha8Rng| {
            let v: Vec<BigInt> = (0..n)
                .map(|_| BigInt::from(rng.gen_range(-6..=6)))
                .collect();
            SemidirectElement::new(phi.clone(), v, rng.gen_range(-4..=4)).unwrap()
        };
        for _ in 0..1_000 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let c = random_element(&mut rng);
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap(),
                "associativity"
            );
            assert!(a.mul(&a.inverse()).unwrap().is_identity());
            assert!(a.commutator(&a).unwrap().is_identity());
        }
    }
}

#[test]
fn commutator_lattice_cross_module_sweep() {
    use relfree::spectra::commutator_lattice_index;
    for n in [2usize, 3] {
        let phi = spectrum_free_automorphism(n).unwrap();
        for m in 1..=3i64 {
            for k in 1..=6i64 {
                let phi_k = SemidirectElement::automorphism_power(phi.clone(), k).unwrap();
                let columns: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| {
                        let mut e = vec![BigInt::zero(); n];
                        e[i] = BigInt::from(m);
                        SemidirectElement::translation(phi.clone(), e)
                            .unwrap()
                            .commutator(&phi_k)
                            .unwrap()
                            .vector()
                            .to_vec()
                    })
                    .collect();
                let span = IntMatrix::from_fn(n, |r, c| columns[c][r].clone());
                assert_eq!(
                    lattice_index(&span),
                    commutator_lattice_index(&phi, m, k).unwrap(),
                    "n={n} m={m} k={k}"
                );
            }
        }
    }
}
