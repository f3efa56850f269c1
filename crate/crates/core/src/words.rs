//! Words in a free group of finite rank: parsing, free reduction, and the
//! exponent-sum map onto the free abelian group.
//!
//! The grammar is
//!
//! ```text
//! expr   := factor+
//! factor := atom | group | comm
//! atom   := 'x' INT ('^' SINT)?
//! group  := '(' expr ')' ('^' SINT)?
//! comm   := '[' expr ',' expr ']' ('^' SINT)?
//! ```
//!
//! with factors separated by whitespace or `*`, and empty input denoting the
//! identity. Commutators follow the convention `[u,v] = u^-1 v^-1 u v`; the
//! same convention is used by every other module. Generators are 1-indexed.

use crate::error::{Error, Result};
use std::fmt;

/// A single letter x_i or x_i^-1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    generator: usize,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator >= 1, "generators are 1-indexed");
        Letter { generator, inverse }
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Cancel adjacent inverse pairs until none remain.
pub fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::new();
    for letter in letters {
        match stack.last() {
            Some(top) if top.cancels(&letter) => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    stack
}

/// A freely reduced word in the free group on `rank` generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::from_letters(rank, [Letter::new(i, false)])
    }

    /// Build a word from raw letters, validating indices and reducing.
    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        assert!(rank >= 1, "rank must be positive");
        let letters: Vec<Letter> = letters.into_iter().collect();
        for l in &letters {
            if l.generator > rank {
                return Err(Error::RankTooSmall {
                    min: l.generator,
                    got: rank,
                });
            }
        }
        Ok(Word {
            rank,
            letters: free_reduce(letters),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let letters = self.letters.iter().chain(&other.letters).copied();
        Ok(Word {
            rank: self.rank,
            letters: free_reduce(letters),
        })
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(Letter::inverted).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word {
            rank: self.rank,
            letters: free_reduce(letters),
        }
    }

    /// `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.inverse()
            .concat(&other.inverse())?
            .concat(self)?
            .concat(other)
    }

    /// `g^-1 self g`.
    pub fn conjugated_by(&self, g: &Word) -> Result<Word> {
        g.inverse().concat(self)?.concat(g)
    }

    /// Exponent sums per generator: the image in the free abelian group.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for l in &self.letters {
            sums[l.generator - 1] += l.sign();
        }
        sums
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let e = l.sign() * run as i64;
            if e == 1 {
                write!(f, "x{}", l.generator)?;
            } else {
                write!(f, "x{}^{}", l.generator, e)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Parse a word expression against the module grammar.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    assert!(rank >= 1, "rank must be positive");
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        rank,
    };
    parser.skip_separators();
    if parser.at_end() {
        return Ok(Word::identity(rank));
    }
    let letters = parser.parse_expr()?;
    parser.skip_separators();
    if !parser.at_end() {
        return Err(parser.fail("unexpected trailing input"));
    }
    Word::from_letters(rank, letters)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    rank: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace() || b == b'*') {
            self.pos += 1;
        }
    }

    fn fail(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn parse_expr(&mut self) -> Result<Vec<Letter>> {
        let mut letters = self.parse_factor()?;
        loop {
            self.skip_separators();
            match self.peek() {
                None | Some(b')') | Some(b']') | Some(b',') => return Ok(letters),
                Some(_) => letters.extend(self.parse_factor()?),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Vec<Letter>> {
        match self.peek() {
            Some(b'x') => self.parse_atom(),
            Some(b'(') => {
                self.pos += 1;
                self.skip_separators();
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                let e = self.parse_exponent()?;
                Ok(repeat_letters(inner, e))
            }
            Some(b'[') => {
                self.pos += 1;
                self.skip_separators();
                let left = self.parse_expr()?;
                self.expect(b',')?;
                self.skip_separators();
                let right = self.parse_expr()?;
                self.expect(b']')?;
                let mut letters: Vec<Letter> = left.iter().rev().map(Letter::inverted).collect();
                letters.extend(right.iter().rev().map(Letter::inverted));
                letters.extend(&left);
                letters.extend(&right);
                let e = self.parse_exponent()?;
                Ok(repeat_letters(letters, e))
            }
            Some(b) => Err(self.fail(format!("expected 'x', '(' or '[', found {:?}", b as char))),
            None => Err(self.fail("expected a factor")),
        }
    }

    fn parse_atom(&mut self) -> Result<Vec<Letter>> {
        self.expect(b'x')?;
        let index = self.parse_unsigned()?;
        if index == 0 {
            return Err(self.fail("generator index must be at least 1"));
        }
        if index > self.rank as i64 {
            return Err(self.fail(format!("generator x{index} exceeds rank {}", self.rank)));
        }
        let letter = Letter::new(index as usize, false);
        let e = self.parse_exponent()?;
        Ok(repeat_letters(vec![letter], e))
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(format!("expected {:?}", b as char)))
        }
    }

    /// The optional `^<int>` suffix; 1 when absent.
    fn parse_exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let magnitude = self.parse_unsigned()?;
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn parse_unsigned(&mut self) -> Result<i64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected digits"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|e| Error::Parse {
                pos: start,
                msg: format!("integer out of range: {e}"),
            })
    }
}

fn repeat_letters(letters: Vec<Letter>, e: i64) -> Vec<Letter> {
    let base: Vec<Letter> = if e < 0 {
        letters.iter().rev().map(Letter::inverted).collect()
    } else {
        letters
    };
    let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn letters(signed: &[(usize, i64)]) -> Vec<Letter> {
        signed.iter().map(|&(g, s)| Letter::new(g, s < 0)).collect()
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("x1 x2^-1", 2).unwrap();
        assert_eq!(w.letters(), letters(&[(1, 1), (2, -1)]).as_slice());

        let w = parse_word("[x1,x2]", 2).unwrap();
        assert_eq!(
            w.letters(),
            letters(&[(1, -1), (2, -1), (1, 1), (2, 1)]).as_slice()
        );

        let w = parse_word("(x1 x2)^2", 2).unwrap();
        assert_eq!(
            w.letters(),
            letters(&[(1, 1), (2, 1), (1, 1), (2, 1)]).as_slice()
        );
    }

    #[test]
    fn parse_accepts_stars_zero_exponents_and_nesting() {
        assert_eq!(parse_word("x1*x2", 2).unwrap().to_string(), "x1 x2");
        assert!(parse_word("x1^0", 1).unwrap().is_identity());
        assert!(parse_word("", 3).unwrap().is_identity());
        assert!(parse_word("   ", 3).unwrap().is_identity());
        let nested = parse_word("[[x1,x2],x3]^-1", 3).unwrap();
        let inner = parse_word("[x1,x2]", 3).unwrap();
        let x3 = Word::generator(3, 3).unwrap();
        assert_eq!(nested, inner.commutator(&x3).unwrap().inverse());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_word("x3", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("x0", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("(x1", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("[x1 x2]", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("y1", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("x1)", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("x1^", 2), Err(Error::Parse { .. })));
    }

    #[test]
    fn free_reduction_examples() {
        assert!(free_reduce(letters(&[(1, 1), (1, -1)])).is_empty());
        assert_eq!(
            free_reduce(letters(&[(1, 1), (2, 1), (2, -1), (1, 1)])),
            letters(&[(1, 1), (1, 1)])
        );
        let reduced = letters(&[(1, 1), (2, 1), (1, -1)]);
        assert_eq!(free_reduce(reduced.clone()), reduced);
    }

    #[test]
    fn cancellation_across_concat() {
        let u = parse_word("x1 x2", 2).unwrap();
        let w = u.concat(&u.inverse()).unwrap();
        assert!(w.is_identity());
        assert_eq!(u.concat(&Word::identity(2)).unwrap(), u);
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(parse_word("x1 x2 x1", 2).unwrap().abelianize(), vec![2, 1]);
        assert_eq!(parse_word("[x1,x2]", 2).unwrap().abelianize(), vec![0, 0]);
        assert_eq!(Word::identity(2).abelianize(), vec![0, 0]);
    }

    #[test]
    fn display_compresses_runs() {
        assert_eq!(
            parse_word("x1 x1 x2^-2", 2).unwrap().to_string(),
            "x1^2 x2^-2"
        );
        assert_eq!(Word::identity(2).to_string(), "");
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let u = Word::identity(2);
        let v = Word::identity(3);
        assert_eq!(
            u.concat(&v).unwrap_err(),
            Error::RankMismatch { left: 2, right: 3 }
        );
        assert!(matches!(
            Word::from_letters(2, [Letter::new(5, false)]),
            Err(Error::RankTooSmall { min: 5, got: 2 })
        ));
    }

    fn arb_word(rank: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec((1..=rank, proptest::bool::ANY), 0..24).prop_map(move |raw| {
            Word::from_letters(rank, raw.into_iter().map(|(g, inv)| Letter::new(g, inv))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(w in arb_word(4)) {
            let text = w.to_string();
            prop_assert_eq!(parse_word(&text, 4).unwrap(), w);
        }

        #[test]
        fn reduction_is_idempotent(w in arb_word(3)) {
            let again = free_reduce(w.letters().iter().copied());
            prop_assert_eq!(again.as_slice(), w.letters());
        }

        #[test]
        fn word_times_inverse_is_identity(w in arb_word(3)) {
            prop_assert!(w.concat(&w.inverse()).unwrap().is_identity());
        }

        #[test]
        fn abelianize_is_additive(u in arb_word(3), v in arb_word(3)) {
            let sum: Vec<i64> = u
                .abelianize()
                .iter()
                .zip(v.abelianize())
                .map(|(a, b)| a + b)
                .collect();
            prop_assert_eq!(u.concat(&v).unwrap().abelianize(), sum);
        }

        #[test]
        fn pow_matches_repeated_concat(w in arb_word(3), e in -4i64..=4) {
            let mut expected = Word::identity(3);
            let step = if e < 0 { w.inverse() } else { w.clone() };
            for _ in 0..e.unsigned_abs() {
                expected = expected.concat(&step).unwrap();
            }
            prop_assert_eq!(w.pow(e), expected);
        }
    }
}
