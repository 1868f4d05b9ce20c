//! The involution `phi` on `B_m` and the descent-free factorization on `L_m`.
//!
//! `phi` exchanges `maj_b` with `rmaj_b` while preserving `Neg(sigma^{-1})`,
//! which is what makes the two major indices equidistributed on `B_m` (and,
//! since it also preserves the letter multiset and hence `#Neg`, on `D_m`
//! with the `dmaj`/`drmaj` pair).
//!
//! The factorization writes every signed even permutation uniquely as
//! `pi = sigma u` where `u` is an even unsigned permutation and `sigma` has
//! no A-descents. The descent-free part is the ascending sort of the window
//! letters, composed with `s_1` when the sort lands outside `L_m`; exactly
//! one of the two cases applies because `s_1` flips the parity of the
//! unsigned image.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::SignedPermutation;
use crate::stats::{des_a, des_a_set, ell_a, ell_l, neg_inv_set};

/// Order-reversing relabelling of the window letters followed by window
/// reversal: sort the letters ascending, map the k-th smallest to the k-th
/// largest, and read the window right to left.
pub fn phi(sigma: &SignedPermutation) -> SignedPermutation {
    let m = sigma.degree();
    let mut letters: Vec<i32> = sigma.window().to_vec();
    letters.sort_unstable();
    // rho maps letters[k] -> letters[m-1-k]; realized through the rank of
    // each letter in the sorted list.
    let rho = |v: i32| -> i32 {
        let k = letters.binary_search(&v).expect("letter of the window");
        letters[m - 1 - k]
    };
    let window: Vec<i32> = sigma.window().iter().rev().map(|&v| rho(v)).collect();
    SignedPermutation::from_window(window).expect("phi permutes the letters")
}

/// The two branches of the descent-free factorization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorCase {
    /// The ascending sort of the letters already lies in `L_m`.
    SortedInL = 1,
    /// The sort lies outside; `sigma` is the sort times `s_1`.
    SortedTimesS1 = 2,
}

/// Result of [`descent_free_factor`]: `pi = sigma u` with
/// `des_a(sigma) = 0` and `u` even unsigned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MainLemmaFactors {
    pub sigma: SignedPermutation,
    pub u: SignedPermutation,
    pub case: FactorCase,
}

impl MainLemmaFactors {
    /// Re-checks every law the factorization promises; used by the
    /// verification harness and the CLI.
    pub fn laws(&self, pi: &SignedPermutation) -> Vec<(&'static str, bool)> {
        use crate::stats::{del_b, inv};
        let recomposed = self.sigma.compose(&self.u);
        vec![
            ("sigma * u = pi", &recomposed == pi),
            ("u is even unsigned", Group::A.contains(&self.u)),
            ("sigma is descent-free", des_a(&self.sigma) == 0),
            (
                "Neg(sigma^{-1}) = Neg(pi^{-1})",
                neg_inv_set(&self.sigma) == neg_inv_set(pi),
            ),
            ("Des_A(u) = Des_A(pi)", des_a_set(&self.u) == des_a_set(pi)),
            (
                "inv - del_B matches",
                inv(&self.u) - del_b(&self.u) == inv(pi) - del_b(pi),
            ),
            (
                "ell_L(pi) = ell_A(u) + sum Neg(pi^{-1})",
                ell_l(pi)
                    == ell_a(&self.u).expect("u is in A")
                        + neg_inv_set(pi).iter().map(|&i| i as u64).sum::<u64>(),
            ),
        ]
    }
}

/// Factors `pi in L_m` as `sigma u` with `des_a(sigma) = 0` and
/// `u in A_m`. The factors are unique (checked exhaustively in the
/// verification suite).
pub fn descent_free_factor(pi: &SignedPermutation) -> Result<MainLemmaFactors> {
    if !Group::L.contains(pi) {
        return Err(Error::NotAMember {
            window: pi.to_string(),
            group: Group::L,
        });
    }
    let m = pi.degree();
    if m < 2 {
        return Err(Error::DegreeTooSmall {
            what: "the descent-free factorization",
            min: 2,
            got: m,
        });
    }
    let mut letters: Vec<i32> = pi.window().to_vec();
    letters.sort_unstable();
    let sorted = SignedPermutation::from_window(letters).expect("sorted letters form a window");
    let (sigma, case) = if Group::L.contains(&sorted) {
        (sorted, FactorCase::SortedInL)
    } else {
        let s1 = SignedPermutation::s_gen(m, 1)?;
        (sorted.compose(&s1), FactorCase::SortedTimesS1)
    };
    let u = sigma.inverse().compose(pi);
    Ok(MainLemmaFactors { sigma, u, case })
}

/// The descent-free representatives `T = {sigma in L_m : des_a(sigma) = 0}`.
/// There are exactly `2^m` of them, one per subset of `{1, ..., m}` realized
/// as `Neg(sigma^{-1})`.
pub fn descent_free_set(m: usize) -> Result<Vec<SignedPermutation>> {
    Ok(Group::L
        .enumerate(m)?
        .filter(|sigma| des_a(sigma) == 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{maj_b, rmaj_b};

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_worked_example() {
        let sigma = p("5,-1,2,-3,4");
        let image = phi(&sigma);
        assert_eq!(image, p("-1,5,2,4,-3"));
        assert_eq!(maj_b(&sigma), rmaj_b(&image));
        assert_eq!(neg_inv_set(&sigma), vec![1, 3]);
        assert_eq!(neg_inv_set(&image), vec![1, 3]);
    }

    #[test]
    fn phi_fixes_identity() {
        for m in 1..=5 {
            let id = SignedPermutation::identity(m).unwrap();
            assert_eq!(phi(&id), id);
        }
    }

    #[test]
    fn phi_is_an_involution_on_b4() {
        for sigma in Group::B.enumerate(4).unwrap() {
            assert_eq!(phi(&phi(&sigma)), sigma, "{sigma}");
        }
    }

    #[test]
    fn phi_exchanges_major_indices_on_b4() {
        for sigma in Group::B.enumerate(4).unwrap() {
            let image = phi(&sigma);
            assert_eq!(maj_b(&sigma), rmaj_b(&image), "{sigma}");
            assert_eq!(neg_inv_set(&sigma), neg_inv_set(&image), "{sigma}");
        }
    }

    #[test]
    fn factorization_worked_example() {
        // The letters of [3,5,-4,2,-1] sort to [-4,-1,2,3,5], whose unsigned
        // image is a 4-cycle (odd), so the second case applies.
        let pi = p("3,5,-4,2,-1");
        let f = descent_free_factor(&pi).unwrap();
        assert_eq!(f.case, FactorCase::SortedTimesS1);
        assert_eq!(f.sigma, p("-1,-4,2,3,5"));
        assert_eq!(f.u, p("4,5,2,3,1"));
        assert!(f.laws(&pi).iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn factorization_of_identity() {
        let id = SignedPermutation::identity(4).unwrap();
        let f = descent_free_factor(&id).unwrap();
        assert_eq!(f.case, FactorCase::SortedInL);
        assert_eq!(f.sigma, id);
        assert_eq!(f.u, id);
    }

    #[test]
    fn factorization_laws_hold_on_l4() {
        for pi in Group::L.enumerate(4).unwrap() {
            let f = descent_free_factor(&pi).unwrap();
            for (law, ok) in f.laws(&pi) {
                assert!(ok, "{law} fails for {pi}");
            }
        }
    }

    #[test]
    fn factorization_is_unique_on_l4() {
        let t = descent_free_set(4).unwrap();
        assert_eq!(t.len(), 16); // 2^m representatives
        for pi in Group::L.enumerate(4).unwrap() {
            let matches = t
                .iter()
                .filter(|sigma| Group::A.contains(&sigma.inverse().compose(&pi)))
                .count();
            assert_eq!(matches, 1, "{pi}");
        }
    }

    #[test]
    fn membership_is_required() {
        assert!(descent_free_factor(&p("2,1,3")).is_err());
    }
}
