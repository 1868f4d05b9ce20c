//! Signed permutations in window notation.
//!
//! A signed permutation of degree `m` is a bijection `sigma` of
//! `{-m, ..., -1, 1, ..., m}` with `sigma(-i) = -sigma(i)`. It is stored in
//! window notation `[sigma(1), ..., sigma(m)]`; the negative half is implied
//! and never materialized. The group of all of them is the hyperoctahedral
//! group `B_m`.
//!
//! Composition follows `(sigma tau)(i) = sigma(tau(i))`, i.e. the right
//! factor acts first. Under this convention right multiplication by the sign
//! generator `s_0 = [-1, 2, ..., m]` flips the sign of the first window
//! entry, and right multiplication by the adjacent transposition `s_i` swaps
//! window positions `i` and `i + 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Element of the hyperoctahedral group `B_m` in window notation.
///
/// The absolute values of the window entries form a permutation of
/// `{1, ..., m}` and no entry is zero. The derived `Ord` is lexicographic on
/// the window, which is also the enumeration order used throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// The identity `[1, 2, ..., m]`.
    pub fn identity(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(SignedPermutation {
            window: (1..=m as i32).collect(),
        })
    }

    /// Builds an element from its window, validating the invariants.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let m = window.len();
        let mut seen = vec![false; m + 1];
        for (idx, &v) in window.iter().enumerate() {
            let position = idx + 1;
            if v == 0 {
                return Err(Error::InvalidWindow {
                    position,
                    reason: "zero is not a valid letter".into(),
                });
            }
            let a = v.unsigned_abs() as usize;
            if a > m {
                return Err(Error::InvalidWindow {
                    position,
                    reason: format!("absolute value {a} exceeds the degree {m}"),
                });
            }
            if seen[a] {
                return Err(Error::InvalidWindow {
                    position,
                    reason: format!("absolute value {a} occurs twice"),
                });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn degree(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// The image `sigma(i)` for `1 <= |i| <= m`, using `sigma(-i) = -sigma(i)`.
    pub fn image(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.degree());
        if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    /// Group product with the right factor applied first:
    /// `(self * rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &SignedPermutation) -> SignedPermutation {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "degree mismatch: {} vs {}",
            self.degree(),
            rhs.degree()
        );
        SignedPermutation {
            window: rhs.window.iter().map(|&v| self.image(v)).collect(),
        }
    }

    /// Group inverse. The inverse window holds `i * sign(sigma(i))` at
    /// position `|sigma(i)|`.
    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.degree()];
        for (idx, &v) in self.window.iter().enumerate() {
            let i = (idx + 1) as i32;
            window[(v.unsigned_abs() - 1) as usize] = if v > 0 { i } else { -i };
        }
        SignedPermutation { window }
    }

    /// The sign-forgetting homomorphism `Abs : B_m -> S_m`,
    /// `Abs(sigma)(i) = |sigma(i)|`.
    pub fn abs(&self) -> SignedPermutation {
        SignedPermutation {
            window: self.window.iter().map(|v| v.abs()).collect(),
        }
    }

    /// Whether every window entry is positive, i.e. the element lies in the
    /// parabolic copy of `S_m`.
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// Parity of `Abs(sigma)` as a permutation: `true` iff even.
    pub fn abs_is_even(&self) -> bool {
        // Count cycles of the underlying unsigned permutation.
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut transpositions = 0usize;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = (self.window[at].unsigned_abs() - 1) as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Embeds into a larger degree by appending fixed points. Embedding is
    /// always explicit; operations on mixed degrees are errors.
    pub fn embed(&self, m: usize) -> Result<SignedPermutation> {
        if m < self.degree() {
            return Err(Error::DegreeTooSmall {
                what: "embed",
                min: self.degree(),
                got: m,
            });
        }
        let mut window = self.window.clone();
        window.extend(self.degree() as i32 + 1..=m as i32);
        Ok(SignedPermutation { window })
    }

    /// The adjacent transposition `s_i` (`1 <= i <= m-1`) or the sign
    /// generator `s_0 = [-1, 2, ..., m]`.
    pub fn s_gen(m: usize, i: usize) -> Result<SignedPermutation> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        if i >= m {
            return Err(Error::TokenOutOfRange {
                token: format!("s{i}"),
                degree: m,
            });
        }
        let mut p = SignedPermutation::identity(m)?;
        if i == 0 {
            p.window[0] = -1;
        } else {
            p.window.swap(i - 1, i);
        }
        Ok(p)
    }

    /// The alternating-group generator `a_i = s_1 s_{i+1}` (`1 <= i <= m-2`)
    /// or `a_0 = s_0`.
    pub fn a_gen(m: usize, i: usize) -> Result<SignedPermutation> {
        if i == 0 {
            return SignedPermutation::s_gen(m, 0);
        }
        if i + 2 > m {
            return Err(Error::TokenOutOfRange {
                token: format!("a{i}"),
                degree: m,
            });
        }
        let s1 = SignedPermutation::s_gen(m, 1)?;
        let si1 = SignedPermutation::s_gen(m, i + 1)?;
        Ok(s1.compose(&si1))
    }

    /// The inverse `a_1^{-1} = s_2 s_1 = [3, 1, 2, 4, ..., m]`.
    pub fn a1_inv(m: usize) -> Result<SignedPermutation> {
        Ok(SignedPermutation::a_gen(m, 1)?.inverse())
    }
}

impl fmt::Display for SignedPermutation {
    /// Window text form: comma-separated signed integers, e.g. `5,-1,2,-3,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.window.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses the window text form. Surrounding brackets are accepted and
    /// stripped, so `[5,-1,2,-3,4]` and `5,-1,2,-3,4` are equivalent.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').unwrap_or(s);
        let s = s.strip_suffix(']').unwrap_or(s);
        if s.trim().is_empty() {
            return Err(Error::ZeroDegree);
        }
        let mut window = Vec::new();
        for (idx, piece) in s.split(',').enumerate() {
            let position = idx + 1;
            let v: i32 = piece.trim().parse().map_err(|_| Error::InvalidWindow {
                position,
                reason: format!("`{}` is not an integer", piece.trim()),
            })?;
            window.push(v);
        }
        SignedPermutation::from_window(window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_windows() {
        assert_eq!(SignedPermutation::identity(3).unwrap().window(), [1, 2, 3]);
        assert_eq!(SignedPermutation::identity(1).unwrap().window(), [1]);
        assert_eq!(
            SignedPermutation::identity(5).unwrap().window(),
            [1, 2, 3, 4, 5]
        );
        assert_eq!(SignedPermutation::identity(0), Err(Error::ZeroDegree));
    }

    #[test]
    fn window_validation() {
        assert!(matches!(
            SignedPermutation::from_window(vec![1, 0, 3]),
            Err(Error::InvalidWindow { position: 2, .. })
        ));
        assert!(matches!(
            SignedPermutation::from_window(vec![1, -1, 3]),
            Err(Error::InvalidWindow { position: 2, .. })
        ));
        assert!(matches!(
            SignedPermutation::from_window(vec![1, 4, 3]),
            Err(Error::InvalidWindow { position: 2, .. })
        ));
    }

    #[test]
    fn compose_right_factor_first() {
        // Right multiplication by s_0 flips the sign of the first entry.
        let sigma = p("5,-1,2,-3,4");
        let s0 = SignedPermutation::s_gen(5, 0).unwrap();
        assert_eq!(sigma.compose(&s0), p("-5,-1,2,-3,4"));

        let c = p("2,3,1");
        assert_eq!(c.compose(&c.inverse()), p("1,2,3"));

        let s0 = p("-1,2");
        assert_eq!(s0.compose(&s0), p("1,2"));
    }

    #[test]
    fn inverse_examples() {
        // Frozen from composing back to the identity.
        let sigma = p("5,-1,2,-3,4");
        let inv = sigma.inverse();
        assert_eq!(inv, p("-2,3,-4,5,1"));
        assert_eq!(sigma.compose(&inv), SignedPermutation::identity(5).unwrap());
        assert_eq!(p("2,3,1").inverse(), p("3,1,2"));
        assert_eq!(p("-1,2,3").inverse(), p("-1,2,3"));
    }

    #[test]
    fn abs_drops_signs() {
        assert_eq!(p("5,-1,2,-3,4").abs(), p("5,1,2,3,4"));
        assert_eq!(p("-1,2,3").abs(), p("1,2,3"));
        assert_eq!(p("3,5,-4,2,-1").abs(), p("3,5,4,2,1"));
    }

    #[test]
    fn abs_parity_matches_inversion_count() {
        for w in [p("1,2,3"), p("2,3,1"), p("2,1,3"), p("5,-1,2,-3,4")] {
            let abs = w.abs();
            let m = abs.degree();
            let mut inversions = 0usize;
            for i in 0..m {
                for j in i + 1..m {
                    if abs.window()[i] > abs.window()[j] {
                        inversions += 1;
                    }
                }
            }
            assert_eq!(w.abs_is_even(), inversions % 2 == 0, "{w}");
        }
    }

    #[test]
    fn parse_round_trip_and_brackets() {
        let sigma = p("[5,-1,2,-3,4]");
        assert_eq!(sigma.to_string(), "5,-1,2,-3,4");
        assert_eq!(sigma, p("5, -1, 2, -3, 4"));
    }

    #[test]
    fn embed_appends_fixed_points() {
        assert_eq!(p("-2,1").embed(4).unwrap(), p("-2,1,3,4"));
        assert!(p("-2,1").embed(1).is_err());
    }
}
