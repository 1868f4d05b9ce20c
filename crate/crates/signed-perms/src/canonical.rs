//! Canonical presentations in `S_m`, `B_m`, `A_m` and `L_m`.
//!
//! Each style factors a group element uniquely as a product of one word from
//! each family `R_j`:
//!
//! * `R_j^S = {1, s_j, s_j s_{j-1}, ..., s_j ... s_1}` for `1 <= j <= m-1`;
//! * `R_j^B` extends `R_j^S` by the sign branch
//!   `s_j ... s_1 s_0, s_j ... s_1 s_0 s_1, ..., s_j ... s_1 s_0 s_1 ... s_j`
//!   for `0 <= j <= m-1`;
//! * `R_j^A = {1, a_j, a_j a_{j-1}, ..., a_j ... a_2, a_j ... a_2 a_1,
//!   a_j ... a_2 a_1^{-1}}` for `1 <= j <= m-2`;
//! * `R_j^L` extends `R_j^A` by
//!   `{p a_0, p a_0 a_1^{-1}} ∪ {p a_0 a_1, p a_0 a_1 a_2, ..., p a_0 a_1 ... a_j}`
//!   with `p = a_j ... a_2 a_1^{-1}`, plus the base family
//!   `R_0^L = {1, a_0, a_1 a_0 a_1^{-1}, a_0 a_1 a_0 a_1^{-1}}`.
//!
//! The peeling procedures all work the same way: stage `j` locates the
//! largest unplaced letter, right-multiplies by a word that parks it at its
//! home position (correcting the sign first when the letter is negative),
//! and records the symbolic inverse of that word as the factor. The factor
//! sizes multiply to the group orders, which is how uniqueness is checked.
//!
//! The flattened B-word is always reduced (its token count is `ell_b`). The
//! flattened L-word need not be: `[-3,1,-2]` factors as
//! `(a1 a0 a1^-1)(a1^-1 a0)` with five letters although four suffice.
//!
//! One degenerate corner: the four words of `R_0^L` use the letter `a_1`,
//! which does not exist at degree 2, so the factor words for `L_2` are
//! stored at degree 3 (the smallest degree where they make sense) and
//! evaluate to the degree-3 embeddings.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::SignedPermutation;
use crate::stats::ell_b;
use crate::word::{GeneratorToken, GeneratorWord};

/// Which presentation a [`CanonicalPresentation`] uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Style {
    S,
    B,
    A,
    L,
}

impl Style {
    pub fn name(self) -> &'static str {
        match self {
            Style::S => "S",
            Style::B => "B",
            Style::A => "A",
            Style::L => "L",
        }
    }

    /// The group whose elements this style factors.
    pub fn group(self) -> Group {
        match self {
            Style::S => Group::S,
            Style::B => Group::B,
            Style::A => Group::A,
            Style::L => Group::L,
        }
    }

    /// Valid family indices `j` at degree `m`.
    pub fn family_range(self, m: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Style::S => 1..=m - 1,
            Style::B => 0..=m - 1,
            Style::A => 1..=m.saturating_sub(2),
            Style::L => 0..=m.saturating_sub(2),
        }
    }
}

impl std::str::FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(Style::S),
            "b" => Ok(Style::B),
            "a" => Ok(Style::A),
            "l" => Ok(Style::L),
            other => Err(Error::BadWordAlphabet(format!(
                "`{other}` is not a presentation style (expected s, b, a or l)"
            ))),
        }
    }
}

fn s_run_desc(hi: usize, lo: usize) -> Vec<GeneratorToken> {
    (lo..=hi).rev().map(GeneratorToken::S).collect()
}

fn a_run_desc(hi: usize, lo: usize) -> Vec<GeneratorToken> {
    (lo..=hi).rev().map(GeneratorToken::A).collect()
}

fn a_run_asc(lo: usize, hi: usize) -> Vec<GeneratorToken> {
    (lo..=hi).map(GeneratorToken::A).collect()
}

/// The words of `R_j^L` at degree 2 refer to `a_1`; they are materialized at
/// degree 3 instead.
fn l_word_degree(m: usize) -> usize {
    m.max(3)
}

/// The family `R_j` of the given style, as words at degree `m`, in the
/// published order. Sizes: `|R_j^S| = j+1`, `|R_j^B| = 2(j+1)`,
/// `|R_j^A| = j+2`, `|R_j^L| = 2(j+2)`.
pub fn family(style: Style, j: usize, m: usize) -> Result<Vec<GeneratorWord>> {
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    if !style.family_range(m).contains(&j) || (style == Style::A && m < 3) {
        return Err(Error::FamilyOutOfRange {
            style: style.name(),
            j,
            degree: m,
        });
    }
    let words: Vec<Vec<GeneratorToken>> = match style {
        Style::S => (1..=j + 1).rev().map(|k| s_run_desc(j, k)).collect(),
        Style::B => {
            let mut out: Vec<Vec<GeneratorToken>> =
                (1..=j + 1).rev().map(|k| s_run_desc(j, k)).collect();
            let mut stem = s_run_desc(j, 1);
            stem.push(GeneratorToken::S(0));
            out.push(stem.clone());
            for k in 1..=j {
                let mut w = stem.clone();
                w.extend((1..=k).map(GeneratorToken::S));
                out.push(w);
            }
            out
        }
        Style::A => a_family_words(j),
        Style::L => {
            if j == 0 {
                vec![
                    vec![],
                    vec![GeneratorToken::A(0)],
                    vec![GeneratorToken::A(1), GeneratorToken::A(0), GeneratorToken::AInv1],
                    vec![
                        GeneratorToken::A(0),
                        GeneratorToken::A(1),
                        GeneratorToken::A(0),
                        GeneratorToken::AInv1,
                    ],
                ]
            } else {
                let mut out = a_family_words(j);
                let mut stem = a_run_desc(j, 2);
                stem.push(GeneratorToken::AInv1);
                stem.push(GeneratorToken::A(0));
                out.push(stem.clone());
                let mut w = stem.clone();
                w.push(GeneratorToken::AInv1);
                out.push(w);
                for k in 1..=j {
                    let mut w = stem.clone();
                    w.extend(a_run_asc(1, k));
                    out.push(w);
                }
                out
            }
        }
    };
    let degree = if style == Style::L { l_word_degree(m) } else { m };
    words
        .into_iter()
        .map(|tokens| GeneratorWord::new(degree, tokens))
        .collect()
}

fn a_family_words(j: usize) -> Vec<Vec<GeneratorToken>> {
    let mut out: Vec<Vec<GeneratorToken>> =
        (2..=j + 1).rev().map(|k| a_run_desc(j, k)).collect();
    let mut with_a1 = a_run_desc(j, 2);
    with_a1.push(GeneratorToken::A(1));
    out.push(with_a1);
    let mut with_a1_inv = a_run_desc(j, 2);
    with_a1_inv.push(GeneratorToken::AInv1);
    out.push(with_a1_inv);
    out
}

/// A unique factorization `g = f_0 f_1 ... f_last` with `f_j` drawn verbatim
/// from `R_j` of the style. Identity factors are empty words and display as
/// `1`.
#[derive(Clone, PartialEq, Eq)]
pub struct CanonicalPresentation {
    style: Style,
    degree: usize,
    factors: Vec<GeneratorWord>,
    flattened: GeneratorWord,
}

impl CanonicalPresentation {
    pub fn style(&self) -> Style {
        self.style
    }

    /// Degree of the factored element (the factor words may live at degree 3
    /// when this is 2 and the style is `L`).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[GeneratorWord] {
        &self.factors
    }

    /// Concatenation of all factors.
    pub fn flattened(&self) -> &GeneratorWord {
        &self.flattened
    }

    /// Evaluates the flattened word back to the source element (or to its
    /// degree-3 embedding in the `L_2` corner).
    pub fn eval(&self) -> SignedPermutation {
        self.flattened.eval()
    }

    fn assemble(style: Style, degree: usize, factors: Vec<GeneratorWord>) -> Self {
        let word_degree = factors
            .first()
            .map(|w| w.degree())
            .unwrap_or(degree);
        let mut flattened = GeneratorWord::empty(word_degree);
        for f in &factors {
            flattened = flattened.concat(f);
        }
        CanonicalPresentation {
            style,
            degree,
            factors,
            flattened,
        }
    }
}

impl fmt::Display for CanonicalPresentation {
    /// Parenthesized factor form, e.g. `(a0)(a1)(a2 a1^-1 a0)(a3 a2 a1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        for factor in &self.factors {
            write!(f, "({factor})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.style.name(), self)
    }
}

fn require_member(g: Group, sigma: &SignedPermutation) -> Result<()> {
    if !g.contains(sigma) {
        return Err(Error::NotAMember {
            window: sigma.to_string(),
            group: g,
        });
    }
    Ok(())
}

/// Position (1-based) of the letter with absolute value `letter`.
fn position_of(sigma: &SignedPermutation, letter: i32) -> usize {
    sigma
        .window()
        .iter()
        .position(|v| v.abs() == letter)
        .expect("letter present in every window")
        + 1
}

/// S canonical presentation: stage `j` moves the letter `j + 1` to its
/// place with `w_j = s_j s_{j-1} ... s_r`.
pub fn canonical_s(w: &SignedPermutation) -> Result<CanonicalPresentation> {
    require_member(Group::S, w)?;
    let m = w.degree();
    let mut current = w.clone();
    let mut factors = Vec::new();
    for j in (1..m).rev() {
        let r = position_of(&current, j as i32 + 1);
        let tokens = if r == j + 1 {
            Vec::new()
        } else {
            s_run_desc(j, r)
        };
        let factor = GeneratorWord::new(m, tokens)?;
        current = current.compose(&factor.eval().inverse());
        factors.push(factor);
    }
    factors.reverse();
    debug_assert_eq!(current, SignedPermutation::identity(m)?);
    Ok(CanonicalPresentation::assemble(Style::S, m, factors))
}

/// B canonical presentation: stage `j` peels the factor
/// `sigma_{j-1} in R_{j-1}^B` that parks the letter `j`; a negative letter
/// routes through the `s_0` branch. The flattened word is reduced.
pub fn canonical_b(sigma: &SignedPermutation) -> Result<CanonicalPresentation> {
    let m = sigma.degree();
    let mut current = sigma.clone();
    let mut factors = Vec::new();
    for j in (2..=m).rev() {
        let r = position_of(&current, j as i32);
        let tokens = if current.window()[r - 1] > 0 {
            if r == j {
                Vec::new()
            } else {
                s_run_desc(j - 1, r)
            }
        } else {
            let mut t = s_run_desc(j - 1, 1);
            t.push(GeneratorToken::S(0));
            t.extend((1..r).map(GeneratorToken::S));
            t
        };
        let factor = GeneratorWord::new(m, tokens)?;
        current = current.compose(&factor.eval().inverse());
        factors.push(factor);
    }
    let base = if current.window()[0] < 0 {
        vec![GeneratorToken::S(0)]
    } else {
        Vec::new()
    };
    factors.push(GeneratorWord::new(m, base)?);
    factors.reverse();
    Ok(CanonicalPresentation::assemble(Style::B, m, factors))
}

/// A canonical presentation via the sign-free pull: stage `j` brings the
/// letter `j + 2` home by right multiplication with
/// `a_{r-1} a_r ... a_j` (or the `r <= 2` variants), then records the
/// symbolic inverse, which lies in `R_j^A`.
pub fn canonical_a(v: &SignedPermutation) -> Result<CanonicalPresentation> {
    require_member(Group::A, v)?;
    let m = v.degree();
    let mut current = v.clone();
    let mut factors = Vec::new();
    for j in (1..=m.saturating_sub(2)).rev() {
        let target = j + 2;
        let r = position_of(&current, target as i32);
        let multiplier = GeneratorWord::new(m, pull_tokens(r, j))?;
        current = current.compose(&multiplier.eval());
        factors.push(multiplier.inverse());
    }
    factors.reverse();
    debug_assert_eq!(current, SignedPermutation::identity(m)?);
    Ok(CanonicalPresentation::assemble(Style::A, m, factors))
}

/// Right-multiplier that pulls a positive letter from position `r` to
/// position `j + 2`.
fn pull_tokens(r: usize, j: usize) -> Vec<GeneratorToken> {
    match r {
        1 => a_run_asc(1, j),
        2 => {
            let mut t = vec![GeneratorToken::AInv1];
            t.extend(a_run_asc(2, j));
            t
        }
        _ if r == j + 2 => Vec::new(),
        _ => a_run_asc(r - 1, j),
    }
}

/// Right-multiplier that moves `-(j+2)` from position `r` to position 1
/// and corrects its sign.
fn sign_correction_tokens(r: usize) -> Vec<GeneratorToken> {
    match r {
        1 => vec![GeneratorToken::A(0)],
        2 => vec![GeneratorToken::A(1), GeneratorToken::A(0)],
        3 => vec![GeneratorToken::AInv1, GeneratorToken::A(0)],
        _ => {
            let mut t = a_run_desc(r - 2, 2);
            t.push(GeneratorToken::AInv1);
            t.push(GeneratorToken::A(0));
            t
        }
    }
}

/// L canonical presentation (the recursive peel over `R_j^L`): locate the
/// letter of largest absolute value, correct its sign if negative, pull it
/// to its place, recurse. The base factor comes from `R_0^L`, matched by the
/// sign pattern of the first two entries.
pub fn canonical_l(pi: &SignedPermutation) -> Result<CanonicalPresentation> {
    require_member(Group::L, pi)?;
    let m = pi.degree();
    if m < 2 {
        return Err(Error::DegreeTooSmall {
            what: "the L canonical presentation",
            min: 2,
            got: m,
        });
    }
    let word_degree = l_word_degree(m);
    let mut current = pi.clone();
    let mut factors = Vec::new();
    for j in (1..=m - 2).rev() {
        let target = (j + 2) as i32;
        let r = position_of(&current, target);
        let mut tokens = Vec::new();
        let mut pull_from = r;
        if current.window()[r - 1] < 0 {
            tokens.extend(sign_correction_tokens(r));
            pull_from = 1;
        }
        tokens.extend(pull_tokens(pull_from, j));
        let multiplier = GeneratorWord::new(m, tokens)?;
        current = current.compose(&multiplier.eval());
        factors.push(multiplier.inverse());
    }
    let base_tokens = match (current.window()[0] < 0, current.window()[1] < 0) {
        (false, false) => vec![],
        (true, false) => vec![GeneratorToken::A(0)],
        (false, true) => vec![
            GeneratorToken::A(1),
            GeneratorToken::A(0),
            GeneratorToken::AInv1,
        ],
        (true, true) => vec![
            GeneratorToken::A(0),
            GeneratorToken::A(1),
            GeneratorToken::A(0),
            GeneratorToken::AInv1,
        ],
    };
    factors.push(GeneratorWord::new(word_degree, base_tokens)?);
    factors.reverse();
    if word_degree != m {
        // Restate the degree-m factors at the word degree (only for L_2,
        // where the factor list is just the base word).
        debug_assert_eq!(m, 2);
    }
    Ok(CanonicalPresentation::assemble(Style::L, m, factors))
}

/// Canonical presentation in the requested style.
pub fn canonical(style: Style, g: &SignedPermutation) -> Result<CanonicalPresentation> {
    match style {
        Style::S => canonical_s(g),
        Style::B => canonical_b(g),
        Style::A => canonical_a(g),
        Style::L => canonical_l(g),
    }
}

/// Whether a word in the letters `s_0, ..., s_{m-1}` is reduced, i.e. its
/// token count equals the Coxeter length of its evaluation.
pub fn is_reduced_b(word: &GeneratorWord) -> Result<bool> {
    if !word.is_s_word() {
        return Err(Error::BadWordAlphabet(
            "reducedness is defined for words in the letters s0, s1, ... only".into(),
        ));
    }
    Ok(word.len() as u64 == ell_b(&word.eval()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn family_sizes_and_order() {
        assert_eq!(
            family(Style::S, 1, 4)
                .unwrap()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>(),
            vec!["1", "s1"]
        );
        assert_eq!(
            family(Style::B, 0, 4)
                .unwrap()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>(),
            vec!["1", "s0"]
        );
        for m in 2..=6 {
            for style in [Style::S, Style::B, Style::A, Style::L] {
                if style == Style::A && m < 3 {
                    continue;
                }
                for j in style.family_range(m) {
                    let fam = family(style, j, m).unwrap();
                    let expected = match style {
                        Style::S => j + 1,
                        Style::B => 2 * (j + 1),
                        Style::A => j + 2,
                        Style::L => 2 * (j + 2),
                    };
                    assert_eq!(fam.len(), expected, "{style:?} j={j} m={m}");
                }
            }
        }
        assert!(family(Style::S, 0, 4).is_err());
        assert!(family(Style::S, 4, 4).is_err());
        assert!(family(Style::A, 3, 4).is_err());
    }

    #[test]
    fn published_r2_l() {
        let fam = family(Style::L, 2, 5).unwrap();
        let texts: Vec<String> = fam.iter().map(|w| w.to_string()).collect();
        assert_eq!(
            texts,
            vec![
                "1",
                "a2",
                "a2 a1",
                "a2 a1^-1",
                "a2 a1^-1 a0",
                "a2 a1^-1 a0 a1^-1",
                "a2 a1^-1 a0 a1",
                "a2 a1^-1 a0 a1 a2",
            ]
        );
    }

    #[test]
    fn worked_b_presentation() {
        let pres = canonical_b(&p("5,-1,2,-3,4")).unwrap();
        assert_eq!(pres.to_string(), "(s0)(1)(s2 s1 s0 s1 s2)(1)(s4 s3 s2 s1)");
        assert_eq!(pres.eval(), p("5,-1,2,-3,4"));
        assert_eq!(pres.flattened().len() as u64, ell_b(&p("5,-1,2,-3,4")));
    }

    #[test]
    fn worked_l_presentation() {
        let pres = canonical_l(&p("3,5,-4,2,-1")).unwrap();
        assert_eq!(pres.to_string(), "(a0)(a1)(a2 a1^-1 a0)(a3 a2 a1)");
        assert_eq!(pres.eval(), p("3,5,-4,2,-1"));
    }

    #[test]
    fn non_reduced_l_presentation() {
        let pi = p("-3,1,-2");
        let pres = canonical_l(&pi).unwrap();
        assert_eq!(pres.to_string(), "(a1 a0 a1^-1)(a1^-1 a0)");
        assert_eq!(pres.eval(), pi);
        assert_eq!(pres.flattened().len(), 5);
        // A shorter word for the same element exists, so the flattened
        // canonical word is not reduced.
        let shorter = GeneratorWord::parse(3, "a1 a0 a1 a0").unwrap();
        assert_eq!(shorter.eval(), pi);
        assert!(shorter.len() < pres.flattened().len());
    }

    #[test]
    fn identity_presentations_are_empty_factors() {
        let id = SignedPermutation::identity(4).unwrap();
        for style in [Style::S, Style::B, Style::A, Style::L] {
            let pres = canonical(style, &id).unwrap();
            assert!(pres.factors().iter().all(|f| f.is_empty()), "{style:?}");
            assert_eq!(pres.eval(), id);
        }
    }

    #[test]
    fn small_a_presentations() {
        let pres = canonical_a(&p("3,1,2")).unwrap();
        assert_eq!(pres.to_string(), "(a1^-1)");
        let pres = canonical_a(&p("2,3,1")).unwrap();
        assert_eq!(pres.to_string(), "(a1)");
        assert!(canonical_a(&p("2,1,3")).is_err());
    }

    #[test]
    fn s_presentation_of_3_1_2() {
        // Verified by roundtrip plus exhaustive uniqueness below.
        let pres = canonical_s(&p("3,1,2")).unwrap();
        assert_eq!(pres.to_string(), "(1)(s2 s1)");
        assert_eq!(pres.eval(), p("3,1,2"));
    }

    #[test]
    fn l2_presentations_use_degree_3_words() {
        for pi in Group::L.enumerate(2).unwrap() {
            let pres = canonical_l(&pi).unwrap();
            assert_eq!(pres.degree(), 2);
            assert_eq!(pres.flattened().degree(), 3);
            assert_eq!(pres.eval(), pi.embed(3).unwrap());
        }
        let pres = canonical_l(&p("1,-2")).unwrap();
        assert_eq!(pres.to_string(), "(a1 a0 a1^-1)");
    }

    #[test]
    fn roundtrip_all_styles_small_degrees() {
        for m in 1..=4 {
            for style in [Style::S, Style::B, Style::A, Style::L] {
                if style == Style::L && m < 2 {
                    continue;
                }
                for g in style.group().enumerate(m).unwrap() {
                    let pres = canonical(style, &g).unwrap();
                    let expect = if style == Style::L && m == 2 {
                        g.embed(3).unwrap()
                    } else {
                        g.clone()
                    };
                    assert_eq!(pres.eval(), expect, "{style:?} {g}");
                }
            }
        }
    }

    #[test]
    fn factors_are_verbatim_family_members() {
        for m in 2..=4 {
            for style in [Style::S, Style::B, Style::A, Style::L] {
                if style == Style::A && m < 3 {
                    continue;
                }
                for g in style.group().enumerate(m).unwrap() {
                    let pres = canonical(style, &g).unwrap();
                    let range = style.family_range(m);
                    assert_eq!(pres.factors().len(), range.clone().count());
                    for (j, factor) in range.zip(pres.factors()) {
                        let fam = family(style, j, m).unwrap();
                        assert!(
                            fam.iter().any(|w| w == factor),
                            "{style:?} m={m} j={j}: {factor} not in family"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn b_words_are_reduced_exhaustively() {
        for m in 1..=4 {
            for sigma in Group::B.enumerate(m).unwrap() {
                let pres = canonical_b(&sigma).unwrap();
                assert!(is_reduced_b(pres.flattened()).unwrap(), "{sigma}");
            }
        }
    }

    #[test]
    fn reducedness_examples() {
        let w = GeneratorWord::parse(5, "s0 s2 s1 s0 s1 s2 s4 s3 s2 s1").unwrap();
        assert!(is_reduced_b(&w).unwrap());
        let w = GeneratorWord::parse(5, "s0 s0").unwrap();
        assert!(!is_reduced_b(&w).unwrap());
        let w = GeneratorWord::parse(5, "a1 a0").unwrap();
        assert!(is_reduced_b(&w).is_err());
    }

    #[test]
    fn b_restricts_to_s_and_l_restricts_to_a() {
        for w in Group::S.enumerate(4).unwrap() {
            let b = canonical_b(&w).unwrap();
            let s = canonical_s(&w).unwrap();
            assert!(b.factors()[0].is_empty());
            assert_eq!(&b.factors()[1..], s.factors());
        }
        for v in Group::A.enumerate(4).unwrap() {
            let l = canonical_l(&v).unwrap();
            let a = canonical_a(&v).unwrap();
            assert!(l.factors()[0].is_empty());
            assert_eq!(&l.factors()[1..], a.factors());
        }
    }

    #[test]
    fn counting_identities() {
        for m in 2..=8 {
            for style in [Style::S, Style::B, Style::A, Style::L] {
                if style == Style::A && m < 3 {
                    continue;
                }
                let product: u128 = style
                    .family_range(m)
                    .map(|j| match style {
                        Style::S => (j + 1) as u128,
                        Style::B => 2 * (j + 1) as u128,
                        Style::A => (j + 2) as u128,
                        Style::L => 2 * (j + 2) as u128,
                    })
                    .product();
                assert_eq!(
                    product,
                    style.group().order(m).unwrap(),
                    "{style:?} at degree {m}"
                );
            }
        }
    }

    #[test]
    fn product_map_is_bijective_at_degree_3() {
        use std::collections::BTreeSet;
        for style in [Style::S, Style::B, Style::A, Style::L] {
            let m = 3;
            let mut products = BTreeSet::new();
            let families: Vec<Vec<GeneratorWord>> = style
                .family_range(m)
                .map(|j| family(style, j, m).unwrap())
                .collect();
            let mut stack = vec![SignedPermutation::identity(m).unwrap()];
            for fam in &families {
                let mut next = Vec::new();
                for acc in &stack {
                    for w in fam {
                        next.push(acc.compose(&w.eval()));
                    }
                }
                stack = next;
            }
            for e in stack {
                assert!(products.insert(e), "{style:?} collision");
            }
            let group: BTreeSet<_> = style.group().enumerate(m).unwrap().collect();
            assert_eq!(products, group, "{style:?}");
        }
    }
}
