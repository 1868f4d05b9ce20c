//! Exact integer-coefficient polynomials in `q` and in `(q, t)`.
//!
//! Coefficients are `i64` with checked arithmetic; an overflow aborts rather
//! than wrapping, since a wrong generating function is worse than no answer.
//! Desk-scale group orders (at most about 10^7 elements) keep every
//! coefficient far below the limit.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

/// Hard cap on exponents; hitting it means a misconfigured enumeration
/// budget, not a mathematical error.
const MAX_DEGREE: usize = 1 << 20;

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// Dense univariate polynomial in `q`, coefficients ascending by exponent
/// with trailing zeros trimmed. Equality is coefficient-wise.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly { coeffs: vec![1] }
    }

    pub fn monomial(exp: usize, coeff: i64) -> QPoly {
        let mut p = QPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> QPoly {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
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

    pub fn coeff(&self, exp: usize) -> i64 {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds `coeff * q^exp` in place; the workhorse of generating-function
    /// accumulation.
    pub fn add_term(&mut self, exp: usize, coeff: i64) {
        assert!(exp <= MAX_DEGREE, "exponent {exp} exceeds the degree bound");
        if exp >= self.coeffs.len() {
            self.coeffs.resize(exp + 1, 0);
        }
        self.coeffs[exp] = checked_add(self.coeffs[exp], coeff);
        self.trim();
    }

    /// Evaluation at an integer point (checked); used as an independent
    /// oracle for the ring operations.
    pub fn eval(&self, x: i64) -> i64 {
        let mut acc = 0i64;
        for &c in self.coeffs.iter().rev() {
            acc = checked_add(checked_mul(acc, x), c);
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().fold(0, |acc, &c| checked_add(acc, c))
    }

    /// `1 + q + ... + q^{k-1} + 2 q^k`; the factor appearing in all the
    /// alternating product formulas. For `k = 0` this is the constant 2.
    pub fn truncated_geometric_with_doubled_top(k: usize) -> QPoly {
        let mut coeffs = vec![1i64; k + 1];
        coeffs[k] = 2;
        QPoly::from_coeffs(coeffs)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![0i64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            *slot = checked_add(self.coeff(i), rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let deg = self.coeffs.len() + rhs.coeffs.len() - 1;
        assert!(deg <= MAX_DEGREE, "product degree exceeds the degree bound");
        let mut coeffs = vec![0i64; deg];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = checked_add(coeffs[i + j], checked_mul(a, b));
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    /// Ascending text form, e.g. `1 + q + q^2 + 2q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sparse bivariate polynomial in `(q, t)`, keyed by exponent pair.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QtPoly {
    terms: BTreeMap<(usize, usize), i64>,
}

impl QtPoly {
    pub fn zero() -> QtPoly {
        QtPoly::default()
    }

    pub fn one() -> QtPoly {
        QtPoly::monomial(0, 0, 1)
    }

    pub fn monomial(q_exp: usize, t_exp: usize, coeff: i64) -> QtPoly {
        let mut p = QtPoly::zero();
        p.add_term(q_exp, t_exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q_exp: usize, t_exp: usize, coeff: i64) {
        assert!(
            q_exp <= MAX_DEGREE && t_exp <= MAX_DEGREE,
            "exponent exceeds the degree bound"
        );
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((q_exp, t_exp)).or_insert(0);
        *slot = checked_add(*slot, coeff);
        if *slot == 0 {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    /// Sorted `(q_exp, t_exp, coeff)` triples; the JSON form.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        self.terms.iter().map(|(&(q, t), &c)| (q, t, c)).collect()
    }

    /// Specialization `t := 1`, collapsing onto a univariate polynomial.
    pub fn at_t_one(&self) -> QPoly {
        let mut p = QPoly::zero();
        for (&(q, _), &c) in &self.terms {
            p.add_term(q, c);
        }
        p
    }
}

impl Add<&QtPoly> for &QtPoly {
    type Output = QtPoly;

    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (&(q, t), &c) in &rhs.terms {
            out.add_term(q, t, c);
        }
        out
    }
}

impl Mul<&QtPoly> for &QtPoly {
    type Output = QtPoly;

    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(q1, t1), &c1) in &self.terms {
            for (&(q2, t2), &c2) in &rhs.terms {
                out.add_term(q1 + q2, t1 + t2, checked_mul(c1, c2));
            }
        }
        out
    }
}

impl fmt::Display for QtPoly {
    /// Ascending by `(q, t)` exponents, e.g. `1 + 2qt` or `1 + q + 2q^2 t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(qe, te), &c) in &self.terms {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 || (qe == 0 && te == 0) {
                write!(f, "{a}")?;
            }
            match qe {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{qe}")?,
            }
            if qe != 0 && te != 0 {
                write!(f, " ")?;
            }
            match te {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{te}")?,
            }
        }
        Ok(())
    }
}

/// The subset-constrained product formula for the signed even permutations
/// of degree `m`:
///
/// ```text
/// prod_{i in B} (1 + q^i) * prod_{i=1}^{m-2} (1 + q + ... + q^{i-1} + 2 q^i)
/// ```
///
/// Over `{pi in L_m : Neg(pi^{-1}) subset of B}` this equals both the
/// `nrmaj_l` and the `ell_l` generating functions. Empty products are 1.
pub fn subset_length_product(b: &[usize], m: usize) -> QPoly {
    let mut acc = QPoly::one();
    for &i in b {
        let mut factor = QPoly::one();
        factor.add_term(i, 1);
        acc = &acc * &factor;
    }
    for i in 1..=m.saturating_sub(2) {
        acc = &acc * &QPoly::truncated_geometric_with_doubled_top(i);
    }
    acc
}

/// The bivariate product for the alternating group of degree `m`:
///
/// ```text
/// (1 + 2qt)(1 + q + 2q^2 t) ... (1 + q + ... + q^{m-3} + 2 q^{m-2} t)
/// ```
///
/// At `t = 1` it coincides with `subset_length_product(&[], m)`.
pub fn alternating_length_product(m: usize) -> QtPoly {
    let mut acc = QtPoly::one();
    for i in 1..=m.saturating_sub(2) {
        let mut factor = QtPoly::zero();
        for e in 0..i {
            factor.add_term(e, 0, 1);
        }
        factor.add_term(i, 1, 2);
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn small_products() {
        let a = poly(&[1, 1]); // 1 + q
        let b = poly(&[1, 0, 1]); // 1 + q^2
        assert_eq!(&a * &b, poly(&[1, 1, 1, 1]));
        assert_eq!(&a + &QPoly::zero(), a);
        assert_eq!(&poly(&[1, -1]) + &poly(&[0, 1]), QPoly::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[1, 1, 1, 1]).to_string(), "1 + q + q^2 + q^3");
        assert_eq!(poly(&[1, 2]).to_string(), "1 + 2q");
        assert_eq!(poly(&[0, 0, -3]).to_string(), "-3q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QtPoly::monomial(1, 1, 2).to_string(), "2q t");
        let rr3 = alternating_length_product(3);
        assert_eq!(rr3.to_string(), "1 + 2q t");
    }

    #[test]
    fn subset_product_examples() {
        // Degree 2 with B = {1,2}: (1+q)(1+q^2), no geometric factors.
        assert_eq!(
            subset_length_product(&[1, 2], 2),
            poly(&[1, 1, 1, 1])
        );
        // Degree 2 with B empty: both products are empty.
        assert_eq!(subset_length_product(&[], 2), QPoly::one());
        // Degree 3 with B empty: a single factor 1 + 2q.
        assert_eq!(subset_length_product(&[], 3), poly(&[1, 2]));
    }

    #[test]
    fn alternating_product_examples() {
        assert_eq!(alternating_length_product(2), QtPoly::one());
        let rr3 = alternating_length_product(3);
        assert_eq!(rr3.triples(), vec![(0, 0, 1), (1, 1, 2)]);
        // Degree 4 at t = 1: (1 + 2q)(1 + q + 2q^2).
        let want = &poly(&[1, 2]) * &poly(&[1, 1, 2]);
        assert_eq!(alternating_length_product(4).at_t_one(), want);
    }

    #[test]
    fn t_one_specialization_matches_subset_product() {
        for m in 2..=9 {
            assert_eq!(
                alternating_length_product(m).at_t_one(),
                subset_length_product(&[], m),
                "degree {m}"
            );
        }
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &QPoly::one(), a.clone());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            // Integer evaluation at q = 2 as an independent oracle.
            prop_assert_eq!((&a * &b).eval(2), a.eval(2) * b.eval(2));
            prop_assert_eq!((&a + &b).eval(2), a.eval(2) + b.eval(2));
        }

        #[test]
        fn t_one_commutes_with_arithmetic(
            qa in prop::collection::vec((0usize..5, 0usize..3, -4i64..=4), 0..5),
            qb in prop::collection::vec((0usize..5, 0usize..3, -4i64..=4), 0..5),
        ) {
            let mut a = QtPoly::zero();
            for (q, t, c) in qa { a.add_term(q, t, c); }
            let mut b = QtPoly::zero();
            for (q, t, c) in qb { b.add_term(q, t, c); }
            prop_assert_eq!((&a + &b).at_t_one(), &a.at_t_one() + &b.at_t_one());
            prop_assert_eq!((&a * &b).at_t_one(), &a.at_t_one() * &b.at_t_one());
        }
    }
}
