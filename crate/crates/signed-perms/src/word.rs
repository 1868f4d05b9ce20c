//! Words in the generators of `B_m` and of `C_2 wr A_m`.
//!
//! Two alphabets share one token type: the Coxeter generators
//! `s_0, s_1, ..., s_{m-1}` of `B_m`, and the generators
//! `a_0 = s_0`, `a_i = s_1 s_{i+1}` (`1 <= i <= m-2`) of the signed even
//! permutations, together with the extra symbol `a_1^{-1}` (`a_1` has order
//! 3, so its inverse is a distinct letter).
//!
//! Token validity is checked when a word is built, so evaluation is total.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

/// One generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GeneratorToken {
    /// `s_i`, `0 <= i <= m-1`.
    S(usize),
    /// `a_i`, `0 <= i <= m-2`.
    A(usize),
    /// `a_1^{-1}`.
    AInv1,
}

impl GeneratorToken {
    /// Whether the token exists at degree `m`.
    pub fn valid_for(self, m: usize) -> bool {
        match self {
            GeneratorToken::S(i) => i < m,
            GeneratorToken::A(0) => m >= 1,
            GeneratorToken::A(i) => i + 2 <= m,
            GeneratorToken::AInv1 => m >= 3,
        }
    }

    /// The window of the generator at degree `m`.
    pub fn window(self, m: usize) -> Result<SignedPermutation> {
        match self {
            GeneratorToken::S(i) => SignedPermutation::s_gen(m, i),
            GeneratorToken::A(i) => SignedPermutation::a_gen(m, i),
            GeneratorToken::AInv1 => {
                if m < 3 {
                    return Err(Error::TokenOutOfRange {
                        token: "a1^-1".into(),
                        degree: m,
                    });
                }
                SignedPermutation::a1_inv(m)
            }
        }
    }

    /// The inverse letter. Every generator here is an involution except
    /// `a_1`, whose inverse is the dedicated token.
    pub fn inverse(self) -> GeneratorToken {
        match self {
            GeneratorToken::A(1) => GeneratorToken::AInv1,
            GeneratorToken::AInv1 => GeneratorToken::A(1),
            other => other,
        }
    }

    fn parse(s: &str) -> Option<GeneratorToken> {
        if s == "a1^-1" {
            return Some(GeneratorToken::AInv1);
        }
        let (kind, idx) = s.split_at(1);
        let idx: usize = idx.parse().ok()?;
        match kind {
            "s" => Some(GeneratorToken::S(idx)),
            "a" => Some(GeneratorToken::A(idx)),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorToken::S(i) => write!(f, "s{i}"),
            GeneratorToken::A(i) => write!(f, "a{i}"),
            GeneratorToken::AInv1 => write!(f, "a1^-1"),
        }
    }
}

/// A product of generator letters at a fixed degree. The empty word is the
/// identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    degree: usize,
    tokens: Vec<GeneratorToken>,
}

impl GeneratorWord {
    pub fn new(degree: usize, tokens: Vec<GeneratorToken>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for &t in &tokens {
            if !t.valid_for(degree) {
                return Err(Error::TokenOutOfRange {
                    token: t.to_string(),
                    degree,
                });
            }
        }
        Ok(GeneratorWord { degree, tokens })
    }

    pub fn empty(degree: usize) -> Self {
        GeneratorWord {
            degree,
            tokens: Vec::new(),
        }
    }

    /// Parses the whitespace-separated token form, e.g.
    /// `s0 s2 s1 s0 s1 s2 s4 s3 s2 s1` or `a2 a1^-1 a0`. The single token
    /// `1` denotes the empty word.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for (idx, piece) in text.split_whitespace().enumerate() {
            if piece == "1" {
                continue;
            }
            let token = GeneratorToken::parse(piece).ok_or_else(|| Error::UnknownToken {
                position: idx + 1,
                token: piece.to_string(),
            })?;
            tokens.push(token);
        }
        GeneratorWord::new(degree, tokens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tokens(&self) -> &[GeneratorToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Left-to-right product of the generator windows.
    pub fn eval(&self) -> SignedPermutation {
        let mut acc = SignedPermutation::identity(self.degree).expect("degree >= 1");
        for &t in &self.tokens {
            let g = t.window(self.degree).expect("validated at construction");
            acc = acc.compose(&g);
        }
        acc
    }

    /// Symbolic inverse: reverse the letters and invert each one.
    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord {
            degree: self.degree,
            tokens: self.tokens.iter().rev().map(|t| t.inverse()).collect(),
        }
    }

    /// Concatenation (degrees must agree).
    pub fn concat(&self, rhs: &GeneratorWord) -> GeneratorWord {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&rhs.tokens);
        GeneratorWord {
            degree: self.degree,
            tokens,
        }
    }

    /// Whether the word uses only `s`-letters.
    pub fn is_s_word(&self) -> bool {
        self.tokens
            .iter()
            .all(|t| matches!(t, GeneratorToken::S(_)))
    }
}

impl fmt::Display for GeneratorWord {
    /// Space-separated tokens; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        for (idx, t) in self.tokens.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} @ {}>", self, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, text: &str) -> GeneratorWord {
        GeneratorWord::parse(m, text).unwrap()
    }

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_b_word() {
        // B-canonical word of [5,-1,2,-3,4].
        let word = w(5, "s0 s2 s1 s0 s1 s2 s4 s3 s2 s1");
        assert_eq!(word.eval(), p("5,-1,2,-3,4"));
    }

    #[test]
    fn worked_l_word() {
        // L-canonical word of [3,5,-4,2,-1].
        let word = w(5, "a0 a1 a2 a1^-1 a0 a3 a2 a1");
        assert_eq!(word.eval(), p("3,5,-4,2,-1"));
    }

    #[test]
    fn a1_matches_s1_s2() {
        // a_1 = s_1 s_2, cross-checked against direct composition.
        let a1 = w(3, "a1").eval();
        assert_eq!(a1, p("2,3,1"));
        let s1 = SignedPermutation::s_gen(3, 1).unwrap();
        let s2 = SignedPermutation::s_gen(3, 2).unwrap();
        assert_eq!(a1, s1.compose(&s2));
        assert_eq!(w(3, "a1^-1").eval(), a1.inverse());
    }

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(w(4, "").eval(), SignedPermutation::identity(4).unwrap());
        assert_eq!(w(4, "1").eval(), SignedPermutation::identity(4).unwrap());
    }

    #[test]
    fn token_range_is_enforced() {
        assert!(GeneratorWord::parse(3, "s3").is_err());
        assert!(GeneratorWord::parse(3, "a2").is_err());
        assert!(GeneratorWord::parse(2, "a1").is_err());
        assert!(GeneratorWord::parse(2, "a1^-1").is_err());
        assert!(GeneratorWord::parse(4, "q1").is_err());
        assert!(GeneratorWord::parse(4, "s3 a2 a1^-1 a0").is_ok());
    }

    #[test]
    fn symbolic_inverse_matches_group_inverse() {
        for text in ["s0 s1 s2", "a1 a0 a2", "a1^-1 a0 a1 a2", ""] {
            let word = w(4, text);
            assert_eq!(word.inverse().eval(), word.eval().inverse(), "{text}");
        }
    }

    fn is_identity(word: &GeneratorWord) -> bool {
        word.eval() == SignedPermutation::identity(word.degree()).unwrap()
    }

    fn power(word: &GeneratorWord, k: usize) -> GeneratorWord {
        let mut acc = GeneratorWord::empty(word.degree());
        for _ in 0..k {
            acc = acc.concat(word);
        }
        acc
    }

    #[test]
    fn coxeter_relations_of_b() {
        let m = 5;
        for i in 0..m {
            assert!(is_identity(&power(&w(m, &format!("s{i}")), 2)));
        }
        for i in 1..m - 1 {
            assert!(is_identity(&power(
                &w(m, &format!("s{i} s{}", i + 1)),
                3
            )));
        }
        for i in 1..m {
            for j in 1..m {
                if i + 1 < j {
                    assert!(is_identity(&power(&w(m, &format!("s{i} s{j}")), 2)));
                }
            }
        }
        assert!(is_identity(&power(&w(m, "s0 s1"), 4)));
        for i in 2..m {
            assert!(is_identity(&power(&w(m, &format!("s0 s{i}")), 2)));
        }
    }

    #[test]
    fn relations_of_a_generators() {
        let m = 6;
        assert!(is_identity(&power(&w(m, "a1"), 3)));
        for i in 2..=m - 2 {
            assert!(is_identity(&power(&w(m, &format!("a{i}")), 2)));
        }
        for i in 1..m - 2 {
            assert!(is_identity(&power(
                &w(m, &format!("a{i} a{}", i + 1)),
                3
            )));
        }
        for i in 1..=m - 2 {
            for j in 1..=m - 2 {
                if i + 1 < j {
                    assert!(is_identity(&power(&w(m, &format!("a{i} a{j}")), 2)));
                }
            }
        }
    }

    #[test]
    fn relations_of_signed_even_generators() {
        let m = 6;
        assert!(is_identity(&power(&w(m, "a0"), 2)));
        assert!(is_identity(&power(&w(m, "a0 a1"), 6)));
        assert!(is_identity(&power(&w(m, "a0 a1^-1"), 6)));
        for i in 2..=m - 2 {
            assert!(is_identity(&power(&w(m, &format!("a0 a{i}")), 4)));
        }
    }
}
