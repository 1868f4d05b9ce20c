//! Length and major-index statistics of signed permutations.
//!
//! Everything here is a pure function of the window. The central length
//! facts, all of which are cross-checked against breadth-first word-length
//! oracles in the test suites:
//!
//! * `ell_b(sigma) = inv(sigma) + sum of Neg(sigma^{-1})` equals the Coxeter
//!   length of `sigma` in `B_m` over `{s_0, ..., s_{m-1}}`.
//! * `ell_l(sigma) = ell_b(sigma) - del_b(sigma)` extends the alternating
//!   length to all of `B_m`. It is *not* a length function: for instance
//!   `ell_l([3,1,2]) = ell_l([-1,2,3]) = 1` while their product `[-3,1,2]`
//!   has `ell_l = 3`.
//! * `ell_d(sigma) = ell_b(sigma) - #Neg(sigma)` is the Coxeter length of
//!   `sigma` in `D_m` over `{s_0 s_1 s_0, s_1, ..., s_{m-1}}`.
//!
//! Descent sets come in three flavours. `des_s` and `des_b` are plain window
//! comparisons. The A-descent set is defined through the length: `i` is an
//! A-descent of `pi` when `ell_l(pi a_i) <= ell_l(pi)` — note the non-strict
//! comparison, and note that no window shortcut exists (`des_a_set` of
//! `[2,3,1]` is `{1}` although the window rises at position 1).

use serde::Serialize;

use crate::group::Group;
use crate::perm::SignedPermutation;

/// Inversion number: out-of-order pairs of window entries.
pub fn inv(sigma: &SignedPermutation) -> u64 {
    let w = sigma.window();
    let mut count = 0u64;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Positions `j >= 2` whose entry is smaller than every earlier entry
/// (left-to-right minima), ascending.
pub fn ltrm_set(sigma: &SignedPermutation) -> Vec<usize> {
    let w = sigma.window();
    let mut out = Vec::new();
    let mut min = w[0];
    for j in 1..w.len() {
        if w[j] < min {
            out.push(j + 1);
            min = w[j];
        }
    }
    out
}

/// Number of left-to-right minima.
pub fn del_b(sigma: &SignedPermutation) -> u64 {
    ltrm_set(sigma).len() as u64
}

/// Positions with negative entries, ascending.
pub fn neg_set(sigma: &SignedPermutation) -> Vec<usize> {
    sigma
        .window()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v < 0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `Neg(sigma^{-1})`, computed without inverting: it equals the set of
/// absolute values of the negative window entries.
pub fn neg_inv_set(sigma: &SignedPermutation) -> Vec<usize> {
    let mut out: Vec<usize> = sigma
        .window()
        .iter()
        .filter(|&&v| v < 0)
        .map(|&v| v.unsigned_abs() as usize)
        .collect();
    out.sort_unstable();
    out
}

fn neg_inv_sum(sigma: &SignedPermutation) -> u64 {
    sigma
        .window()
        .iter()
        .filter(|&&v| v < 0)
        .map(|&v| v.unsigned_abs() as u64)
        .sum()
}

fn neg_count(sigma: &SignedPermutation) -> u64 {
    sigma.window().iter().filter(|&&v| v < 0).count() as u64
}

/// Coxeter length in `B_m`: `inv(sigma) + sum of Neg(sigma^{-1})`.
pub fn ell_b(sigma: &SignedPermutation) -> u64 {
    inv(sigma) + neg_inv_sum(sigma)
}

/// `ell_b - del_b`, defined on all of `B_m`.
pub fn ell_l(sigma: &SignedPermutation) -> u64 {
    ell_b(sigma) - del_b(sigma)
}

/// Coxeter length in `S_m` (`= inv`); `None` off `S_m`.
pub fn ell_s(w: &SignedPermutation) -> Option<u64> {
    Group::S.contains(w).then(|| inv(w))
}

/// Alternating length `ell_s - del_b`; `None` off `A_m`. On `A_m` this
/// agrees with `ell_l` and with the token count of the A-canonical word.
pub fn ell_a(w: &SignedPermutation) -> Option<u64> {
    Group::A.contains(w).then(|| inv(w) - del_b(w))
}

/// Coxeter length in `D_m`: `ell_b - #Neg`; `None` off `D_m`.
pub fn ell_d(sigma: &SignedPermutation) -> Option<u64> {
    Group::D.contains(sigma).then(|| ell_b(sigma) - neg_count(sigma))
}

/// `ell_d - del_b`; `None` off `(L ∩ D)_m`.
pub fn ell_ld(pi: &SignedPermutation) -> Option<u64> {
    Group::LD
        .contains(pi)
        .then(|| ell_b(pi) - neg_count(pi) - del_b(pi))
}

/// S-descents: positions `1 <= i <= m-1` with `sigma(i) > sigma(i+1)`.
/// Equivalently, the positions where right multiplication by `s_i` shortens
/// `ell_b` (checked as a property test).
pub fn des_s(sigma: &SignedPermutation) -> Vec<usize> {
    let w = sigma.window();
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// B-descents: `des_s` plus `0` when `sigma(1) < 0` (i.e. `sigma(0) := 0`
/// makes position 0 a descent).
pub fn des_b(sigma: &SignedPermutation) -> Vec<usize> {
    let mut out = Vec::new();
    if sigma.window()[0] < 0 {
        out.push(0);
    }
    out.extend(des_s(sigma));
    out
}

/// Major index: sum of the S-descent positions.
pub fn maj_b(sigma: &SignedPermutation) -> u64 {
    des_s(sigma).iter().map(|&i| i as u64).sum()
}

/// Reverse major index: sum of `m - i` over the S-descents.
pub fn rmaj_b(sigma: &SignedPermutation) -> u64 {
    let m = sigma.degree() as u64;
    des_s(sigma).iter().map(|&i| m - i as u64).sum()
}

/// A-descent set: `{1 <= i <= m-2 : ell_l(pi a_i) <= ell_l(pi)}`, computed
/// literally from the definition (one composition and one length per index).
/// Total on `B_m` since `ell_l` is.
pub fn des_a_set(pi: &SignedPermutation) -> Vec<usize> {
    let m = pi.degree();
    if m < 3 {
        return Vec::new();
    }
    let base = ell_l(pi);
    (1..=m - 2)
        .filter(|&i| {
            let a_i = SignedPermutation::a_gen(m, i).expect("index in range");
            ell_l(&pi.compose(&a_i)) <= base
        })
        .collect()
}

/// A-descent number `|des_a_set|`.
pub fn des_a(pi: &SignedPermutation) -> u64 {
    des_a_set(pi).len() as u64
}

/// Alternating reverse major index: sum of `m - 1 - i` over the A-descents;
/// `None` off `L_m`.
pub fn rmaj_l(pi: &SignedPermutation) -> Option<u64> {
    if !Group::L.contains(pi) {
        return None;
    }
    let n = pi.degree() as u64 - 1;
    Some(des_a_set(pi).iter().map(|&i| n - i as u64).sum())
}

/// Negative alternating reverse major index:
/// `rmaj_l + sum of Neg(pi^{-1})`; `None` off `L_m`.
pub fn nrmaj_l(pi: &SignedPermutation) -> Option<u64> {
    Some(rmaj_l(pi)? + neg_inv_sum(pi))
}

/// `maj_b - #Neg + sum of Neg(sigma^{-1})`; `None` off `D_m`. Nonnegative
/// because the sum of `#Neg` distinct positive integers is at least `#Neg`.
pub fn dmaj(sigma: &SignedPermutation) -> Option<u64> {
    Group::D
        .contains(sigma)
        .then(|| maj_b(sigma) + neg_inv_sum(sigma) - neg_count(sigma))
}

/// `rmaj_b - #Neg + sum of Neg(sigma^{-1})`; `None` off `D_m`.
pub fn drmaj_d(sigma: &SignedPermutation) -> Option<u64> {
    Group::D
        .contains(sigma)
        .then(|| rmaj_b(sigma) + neg_inv_sum(sigma) - neg_count(sigma))
}

/// `rmaj_l - #Neg + sum of Neg(pi^{-1})`; `None` off `(L ∩ D)_m`.
pub fn drmaj_ld(pi: &SignedPermutation) -> Option<u64> {
    if !Group::LD.contains(pi) {
        return None;
    }
    Some(rmaj_l(pi).expect("LD is contained in L") + neg_inv_sum(pi) - neg_count(pi))
}

/// Every statistic of one element, with group-conditional entries absent
/// (`null` in JSON) rather than zeroed when the membership fails.
#[derive(Clone, Debug, Serialize)]
pub struct StatisticsRecord {
    pub window: String,
    pub m: usize,
    pub inv: u64,
    pub ltrm: Vec<usize>,
    #[serde(rename = "del_B")]
    pub del_b: u64,
    pub neg: Vec<usize>,
    pub neg_inv: Vec<usize>,
    #[serde(rename = "ell_B")]
    pub ell_b: u64,
    #[serde(rename = "ell_L")]
    pub ell_l: u64,
    #[serde(rename = "ell_S")]
    pub ell_s: Option<u64>,
    #[serde(rename = "ell_A")]
    pub ell_a: Option<u64>,
    #[serde(rename = "ell_D")]
    pub ell_d: Option<u64>,
    #[serde(rename = "ell_LD")]
    pub ell_ld: Option<u64>,
    #[serde(rename = "des_S")]
    pub des_s: Vec<usize>,
    #[serde(rename = "des_B")]
    pub des_b: Vec<usize>,
    #[serde(rename = "des_A")]
    pub des_a: Vec<usize>,
    #[serde(rename = "maj_B")]
    pub maj_b: u64,
    #[serde(rename = "rmaj_B")]
    pub rmaj_b: u64,
    #[serde(rename = "rmaj_L")]
    pub rmaj_l: Option<u64>,
    #[serde(rename = "nrmaj_L")]
    pub nrmaj_l: Option<u64>,
    pub dmaj: Option<u64>,
    #[serde(rename = "drmaj_D")]
    pub drmaj_d: Option<u64>,
    #[serde(rename = "drmaj_LD")]
    pub drmaj_ld: Option<u64>,
}

impl StatisticsRecord {
    pub fn of(sigma: &SignedPermutation) -> StatisticsRecord {
        StatisticsRecord {
            window: sigma.to_string(),
            m: sigma.degree(),
            inv: inv(sigma),
            ltrm: ltrm_set(sigma),
            del_b: del_b(sigma),
            neg: neg_set(sigma),
            neg_inv: neg_inv_set(sigma),
            ell_b: ell_b(sigma),
            ell_l: ell_l(sigma),
            ell_s: ell_s(sigma),
            ell_a: ell_a(sigma),
            ell_d: ell_d(sigma),
            ell_ld: ell_ld(sigma),
            des_s: des_s(sigma),
            des_b: des_b(sigma),
            des_a: des_a_set(sigma),
            maj_b: maj_b(sigma),
            rmaj_b: rmaj_b(sigma),
            rmaj_l: rmaj_l(sigma),
            nrmaj_l: nrmaj_l(sigma),
            dmaj: dmaj(sigma),
            drmaj_d: drmaj_d(sigma),
            drmaj_ld: drmaj_ld(sigma),
        }
    }
}
