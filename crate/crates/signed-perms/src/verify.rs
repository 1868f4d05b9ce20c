//! Exhaustive verification of the equidistribution identities.
//!
//! Every checker enumerates a whole group at a small degree, accumulates
//! exact generating functions, and compares them coefficient by
//! coefficient. A report either passes or carries concrete evidence of the
//! first discrepancy; there are no tolerances anywhere.
//!
//! The identities covered:
//!
//! * `l_equidist` — for every subset `B` of `{1, ..., m}`, the `nrmaj_L` and
//!   `ell_L` sums over `{pi in L_m : Neg(pi^{-1}) ⊆ B}` both equal
//!   `prod_{i in B}(1+q^i) * prod_{i=1}^{m-2}(1+q+...+q^{i-1}+2q^i)`.
//! * `l_equidist_exact` — the same two sums agree when `Neg(pi^{-1}) = B`
//!   exactly (inclusion-exclusion).
//! * `ld_equidist` — `drmaj` and the length are equidistributed on
//!   `(L ∩ D)_m`, stratum by stratum in the number of sign changes.
//! * `d_equidist` — `dmaj`, `drmaj` and `ell_D` are equidistributed on `D_m`.
//! * `a_equidist` — on `A_m`, the `ell_A` and `rmaj` sums equal the product
//!   formula; the bivariate variant additionally grades by `del_B`, the
//!   candidate reading of the deletion statistic (recorded, not relied on).
//! * `length_oracles` — the closed-form lengths match breadth-first
//!   distances in the Cayley graphs, and `ell_A` matches the canonical word
//!   length.
//! * `structure` — canonical presentations (bijectivity, roundtrip,
//!   reducedness, counting), the involution `phi`, and the descent-free
//!   factorization laws.
//! * `descent_mutation_control` — a deliberately broken variant of the
//!   A-descent set (strict instead of non-strict comparison) must be caught
//!   by the subset identity; this guards the harness against vacuous passes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical, family, is_reduced_b, Style};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::oracle;
use crate::perm::SignedPermutation;
use crate::poly::{alternating_length_product, subset_length_product, QPoly, QtPoly};
use crate::stats;
use crate::structure::{descent_free_factor, descent_free_set, phi};

/// Default cap on the number of elements any single check may enumerate.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Statistic selectable in a generating-function query.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Inv,
    DelB,
    EllB,
    EllL,
    EllS,
    EllA,
    EllD,
    EllLd,
    MajB,
    RmajB,
    RmajL,
    NrmajL,
    Dmaj,
    DrmajD,
    DrmajLd,
    DesA,
}

impl Statistic {
    pub const ALL: [Statistic; 16] = [
        Statistic::Inv,
        Statistic::DelB,
        Statistic::EllB,
        Statistic::EllL,
        Statistic::EllS,
        Statistic::EllA,
        Statistic::EllD,
        Statistic::EllLd,
        Statistic::MajB,
        Statistic::RmajB,
        Statistic::RmajL,
        Statistic::NrmajL,
        Statistic::Dmaj,
        Statistic::DrmajD,
        Statistic::DrmajLd,
        Statistic::DesA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Inv => "inv",
            Statistic::DelB => "del_b",
            Statistic::EllB => "ell_b",
            Statistic::EllL => "ell_l",
            Statistic::EllS => "ell_s",
            Statistic::EllA => "ell_a",
            Statistic::EllD => "ell_d",
            Statistic::EllLd => "ell_ld",
            Statistic::MajB => "maj_b",
            Statistic::RmajB => "rmaj_b",
            Statistic::RmajL => "rmaj_l",
            Statistic::NrmajL => "nrmaj_l",
            Statistic::Dmaj => "dmaj",
            Statistic::DrmajD => "drmaj_d",
            Statistic::DrmajLd => "drmaj_ld",
            Statistic::DesA => "des_a",
        }
    }

    /// The largest group on which the statistic is everywhere defined.
    pub fn required_group(self) -> Group {
        match self {
            Statistic::EllS => Group::S,
            Statistic::EllA => Group::A,
            Statistic::EllD | Statistic::Dmaj | Statistic::DrmajD => Group::D,
            Statistic::RmajL | Statistic::NrmajL => Group::L,
            Statistic::EllLd | Statistic::DrmajLd => Group::LD,
            _ => Group::B,
        }
    }

    /// Value on an element of the required group.
    pub fn eval(self, sigma: &SignedPermutation) -> u64 {
        let member = "eval is only called inside the required group";
        match self {
            Statistic::Inv => stats::inv(sigma),
            Statistic::DelB => stats::del_b(sigma),
            Statistic::EllB => stats::ell_b(sigma),
            Statistic::EllL => stats::ell_l(sigma),
            Statistic::EllS => stats::ell_s(sigma).expect(member),
            Statistic::EllA => stats::ell_a(sigma).expect(member),
            Statistic::EllD => stats::ell_d(sigma).expect(member),
            Statistic::EllLd => stats::ell_ld(sigma).expect(member),
            Statistic::MajB => stats::maj_b(sigma),
            Statistic::RmajB => stats::rmaj_b(sigma),
            Statistic::RmajL => stats::rmaj_l(sigma).expect(member),
            Statistic::NrmajL => stats::nrmaj_l(sigma).expect(member),
            Statistic::Dmaj => stats::dmaj(sigma).expect(member),
            Statistic::DrmajD => stats::drmaj_d(sigma).expect(member),
            Statistic::DrmajLd => stats::drmaj_ld(sigma).expect(member),
            Statistic::DesA => stats::des_a(sigma),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.to_ascii_lowercase();
        Statistic::ALL
            .into_iter()
            .find(|stat| stat.name() == lowered)
            .ok_or_else(|| Error::BadWordAlphabet(format!("`{s}` is not a known statistic")))
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Constraint on `Neg(pi^{-1})` in a generating-function query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NegConstraint {
    None,
    SubsetOf(BTreeSet<usize>),
    EqualTo(BTreeSet<usize>),
    Cardinality(usize),
}

impl NegConstraint {
    fn validate(&self, m: usize) -> Result<()> {
        let set = match self {
            NegConstraint::SubsetOf(b) | NegConstraint::EqualTo(b) => b,
            _ => return Ok(()),
        };
        for &v in set {
            if v == 0 || v > m {
                return Err(Error::IndexOutOfRange { value: v, degree: m });
            }
        }
        Ok(())
    }

    fn admits(&self, neg_inv: &[usize]) -> bool {
        match self {
            NegConstraint::None => true,
            NegConstraint::SubsetOf(b) => neg_inv.iter().all(|i| b.contains(i)),
            NegConstraint::EqualTo(b) => {
                neg_inv.len() == b.len() && neg_inv.iter().all(|i| b.contains(i))
            }
            NegConstraint::Cardinality(k) => neg_inv.len() == *k,
        }
    }
}

impl fmt::Display for NegConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegConstraint::None => write!(f, "none"),
            NegConstraint::SubsetOf(b) => write!(f, "neg_inv ⊆ {}", set_text(b)),
            NegConstraint::EqualTo(b) => write!(f, "neg_inv = {}", set_text(b)),
            NegConstraint::Cardinality(k) => write!(f, "|neg_inv| = {k}"),
        }
    }
}

fn set_text(b: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = b.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A constrained generating-function query `sum q^{stat}` over one group.
#[derive(Clone, Debug)]
pub struct GfQuery {
    pub group: Group,
    pub degree: usize,
    pub stat: Statistic,
    pub constraint: NegConstraint,
}

/// Exact accumulation of the query. Fails when the statistic is undefined
/// somewhere on the group or the group exceeds the budget.
pub fn generating_function(query: &GfQuery, budget: u128) -> Result<QPoly> {
    if !query.group.subgroup_of(query.stat.required_group()) {
        return Err(Error::UndefinedStatistic {
            stat: query.stat.name().into(),
            group: query.group,
            degree: query.degree,
        });
    }
    query.constraint.validate(query.degree)?;
    let mut acc = QPoly::zero();
    for sigma in query.group.enumerate_budgeted(query.degree, budget)? {
        if query.constraint.admits(&stats::neg_inv_set(&sigma)) {
            acc.add_term(query.stat.eval(&sigma) as usize, 1);
        }
    }
    Ok(acc)
}

/// One labelled polynomial inside a report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportSide {
    pub label: String,
    pub poly: String,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// Which identity was tested, e.g. `l_equidist`.
    pub identity: String,
    /// Human-readable parameters, e.g. `m=4 B={1,3}`.
    pub params: String,
    pub pass: bool,
    /// Number of sub-instances folded into this report.
    pub cases: u64,
    /// The polynomials that were compared, in text form.
    pub sides: Vec<ReportSide>,
    /// Evidence for the first failure: a window, a coefficient mismatch, or
    /// a failed law, depending on the check.
    pub counterexample: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn from_sides(
        identity: &str,
        params: String,
        labelled: Vec<(String, QPoly)>,
        started: Instant,
    ) -> VerificationReport {
        let mut pass = true;
        let mut counterexample = None;
        for pair in labelled.windows(2) {
            if pair[0].1 != pair[1].1 {
                pass = false;
                counterexample = Some(first_mismatch(
                    &pair[0].0, &pair[0].1, &pair[1].0, &pair[1].1,
                ));
                break;
            }
        }
        VerificationReport {
            identity: identity.into(),
            params,
            pass,
            cases: 1,
            sides: labelled
                .into_iter()
                .map(|(label, poly)| ReportSide {
                    label,
                    poly: poly.to_string(),
                })
                .collect(),
            counterexample,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

fn first_mismatch(la: &str, a: &QPoly, lb: &str, b: &QPoly) -> String {
    let top = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    for e in 0..=top {
        if a.coeff(e) != b.coeff(e) {
            return format!(
                "coefficient of q^{e}: {la} has {}, {lb} has {}",
                a.coeff(e),
                b.coeff(e)
            );
        }
    }
    "polynomials differ".into()
}

/// Per-element data reused across subset constraints.
struct LTable {
    /// Bitmask of `Neg(pi^{-1})` (bit `i-1` for value `i`).
    masks: Vec<u32>,
    nrmaj: Vec<u64>,
    ell_l: Vec<u64>,
    neg_count: Vec<u64>,
}

fn l_table(m: usize, budget: u128) -> Result<LTable> {
    let mut table = LTable {
        masks: Vec::new(),
        nrmaj: Vec::new(),
        ell_l: Vec::new(),
        neg_count: Vec::new(),
    };
    for pi in Group::L.enumerate_budgeted(m, budget)? {
        let neg_inv = stats::neg_inv_set(&pi);
        let mask = neg_inv.iter().fold(0u32, |acc, &i| acc | 1 << (i - 1));
        table.masks.push(mask);
        table
            .nrmaj
            .push(stats::nrmaj_l(&pi).expect("enumerated inside L"));
        table.ell_l.push(stats::ell_l(&pi));
        table.neg_count.push(neg_inv.len() as u64);
    }
    Ok(table)
}

fn mask_of(b: &BTreeSet<usize>) -> u32 {
    b.iter().fold(0u32, |acc, &i| acc | 1 << (i - 1))
}

/// The subsets swept by default at degree `m`: all of them when there are at
/// most 32, otherwise 32 distinct subsets drawn reproducibly from the seed.
pub fn subset_sample(m: usize, seed: u64) -> Vec<BTreeSet<usize>> {
    let total: u64 = 1 << m;
    let masks: Vec<u64> = if total <= 32 {
        (0..total).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chosen = BTreeSet::new();
        while chosen.len() < 32 {
            chosen.insert(rng.next_u64() % total);
        }
        chosen.into_iter().collect()
    };
    masks
        .into_iter()
        .map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

/// Subset identity on `L_m`: `nrmaj_L` sum = `ell_L` sum = product formula
/// over `{pi : Neg(pi^{-1}) ⊆ B}`.
pub fn verify_l_equidistribution(
    m: usize,
    b: &BTreeSet<usize>,
    budget: u128,
) -> Result<VerificationReport> {
    NegConstraint::SubsetOf(b.clone()).validate(m)?;
    let table = l_table(m, budget)?;
    Ok(l_subset_report(&table, m, b))
}

/// Sweeps [`verify_l_equidistribution`] over many subsets, computing the
/// per-element statistics once.
pub fn verify_l_equidistribution_sweep(
    m: usize,
    subsets: &[BTreeSet<usize>],
    budget: u128,
) -> Result<Vec<VerificationReport>> {
    for b in subsets {
        NegConstraint::SubsetOf(b.clone()).validate(m)?;
    }
    let table = l_table(m, budget)?;
    Ok(subsets.iter().map(|b| l_subset_report(&table, m, b)).collect())
}

fn l_subset_report(table: &LTable, m: usize, b: &BTreeSet<usize>) -> VerificationReport {
    let started = Instant::now();
    let (nrmaj_sum, ell_sum) = sums_over_mask(table, mask_of(b), SubsetMode::Subset);
    let b_list: Vec<usize> = b.iter().copied().collect();
    let product = subset_length_product(&b_list, m);
    VerificationReport::from_sides(
        "l_equidist",
        format!("m={m} B={}", set_text(b)),
        vec![
            ("nrmaj_L sum".into(), nrmaj_sum),
            ("ell_L sum".into(), ell_sum),
            ("product".into(), product),
        ],
        started,
    )
}

/// Exact-subset identity on `L_m`: the two sums over
/// `{pi : Neg(pi^{-1}) = B}` agree.
pub fn verify_l_equidistribution_exact(
    m: usize,
    b: &BTreeSet<usize>,
    budget: u128,
) -> Result<VerificationReport> {
    NegConstraint::EqualTo(b.clone()).validate(m)?;
    let table = l_table(m, budget)?;
    Ok(l_exact_report(&table, m, b))
}

/// Sweeps [`verify_l_equidistribution_exact`] over many subsets with one
/// pass over the group.
pub fn verify_l_equidistribution_exact_sweep(
    m: usize,
    subsets: &[BTreeSet<usize>],
    budget: u128,
) -> Result<Vec<VerificationReport>> {
    for b in subsets {
        NegConstraint::EqualTo(b.clone()).validate(m)?;
    }
    let table = l_table(m, budget)?;
    Ok(subsets.iter().map(|b| l_exact_report(&table, m, b)).collect())
}

fn l_exact_report(table: &LTable, m: usize, b: &BTreeSet<usize>) -> VerificationReport {
    let started = Instant::now();
    let (nrmaj_sum, ell_sum) = sums_over_mask(table, mask_of(b), SubsetMode::Exact);
    VerificationReport::from_sides(
        "l_equidist_exact",
        format!("m={m} B={}", set_text(b)),
        vec![
            ("nrmaj_L sum".into(), nrmaj_sum),
            ("ell_L sum".into(), ell_sum),
        ],
        started,
    )
}

#[derive(Clone, Copy)]
enum SubsetMode {
    Subset,
    Exact,
}

fn sums_over_mask(table: &LTable, b_mask: u32, mode: SubsetMode) -> (QPoly, QPoly) {
    let mut nrmaj_sum = QPoly::zero();
    let mut ell_sum = QPoly::zero();
    for idx in 0..table.masks.len() {
        let mask = table.masks[idx];
        let admit = match mode {
            SubsetMode::Subset => mask & !b_mask == 0,
            SubsetMode::Exact => mask == b_mask,
        };
        if admit {
            nrmaj_sum.add_term(table.nrmaj[idx] as usize, 1);
            ell_sum.add_term(table.ell_l[idx] as usize, 1);
        }
    }
    (nrmaj_sum, ell_sum)
}

/// Equidistribution of `drmaj` and the length on `(L ∩ D)_m`, including the
/// per-stratum refinement by the number of sign changes.
pub fn verify_ld_equidistribution(m: usize, budget: u128) -> Result<VerificationReport> {
    let started = Instant::now();
    let table = l_table(m, budget)?;
    // Stratum 2i collects the pi with exactly 2i sign changes; on it the
    // two statistics are nrmaj_L - #Neg and ell_L - #Neg.
    let mut total_drmaj = QPoly::zero();
    let mut total_len = QPoly::zero();
    let mut cases = 0u64;
    let mut pass = true;
    let mut counterexample = None;
    let mut stratum = 0u64;
    while stratum <= m as u64 {
        let mut drmaj_sum = QPoly::zero();
        let mut len_sum = QPoly::zero();
        for idx in 0..table.masks.len() {
            if table.neg_count[idx] == stratum {
                drmaj_sum.add_term((table.nrmaj[idx] - stratum) as usize, 1);
                len_sum.add_term((table.ell_l[idx] - stratum) as usize, 1);
            }
        }
        total_drmaj = &total_drmaj + &drmaj_sum;
        total_len = &total_len + &len_sum;
        cases += 1;
        if drmaj_sum != len_sum && pass {
            pass = false;
            counterexample = Some(format!(
                "stratum #Neg={stratum}: {}",
                first_mismatch("drmaj sum", &drmaj_sum, "length sum", &len_sum)
            ));
        }
        stratum += 2;
    }
    if total_drmaj != total_len && pass {
        pass = false;
        counterexample = Some(first_mismatch(
            "drmaj sum",
            &total_drmaj,
            "length sum",
            &total_len,
        ));
    }
    Ok(VerificationReport {
        identity: "ld_equidist".into(),
        params: format!("m={m} strata #Neg=0,2,..."),
        pass,
        cases,
        sides: vec![
            ReportSide {
                label: "drmaj_LD sum".into(),
                poly: total_drmaj.to_string(),
            },
            ReportSide {
                label: "ell_LD sum".into(),
                poly: total_len.to_string(),
            },
        ],
        counterexample,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Equidistribution of `dmaj`, `drmaj` and `ell_D` on `D_m`.
pub fn verify_d_equidistribution(m: usize, budget: u128) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut dmaj_sum = QPoly::zero();
    let mut drmaj_sum = QPoly::zero();
    let mut len_sum = QPoly::zero();
    for sigma in Group::D.enumerate_budgeted(m, budget)? {
        dmaj_sum.add_term(stats::dmaj(&sigma).expect("in D") as usize, 1);
        drmaj_sum.add_term(stats::drmaj_d(&sigma).expect("in D") as usize, 1);
        len_sum.add_term(stats::ell_d(&sigma).expect("in D") as usize, 1);
    }
    Ok(VerificationReport::from_sides(
        "d_equidist",
        format!("m={m}"),
        vec![
            ("dmaj sum".into(), dmaj_sum),
            ("drmaj sum".into(), drmaj_sum),
            ("ell_D sum".into(), len_sum),
        ],
        started,
    ))
}

/// Product formula on `A_m` (the `t = 1` specialization): the `ell_A` and
/// `rmaj` sums both equal the alternating product.
pub fn verify_a_equidistribution(m: usize, budget: u128) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut len_sum = QPoly::zero();
    let mut rmaj_sum = QPoly::zero();
    for w in Group::A.enumerate_budgeted(m, budget)? {
        len_sum.add_term(stats::ell_a(&w).expect("in A") as usize, 1);
        rmaj_sum.add_term(stats::rmaj_l(&w).expect("A sits inside L") as usize, 1);
    }
    let product = alternating_length_product(m).at_t_one();
    Ok(VerificationReport::from_sides(
        "a_equidist",
        format!("m={m} t=1"),
        vec![
            ("ell_A sum".into(), len_sum),
            ("rmaj sum".into(), rmaj_sum),
            ("product".into(), product),
        ],
        started,
    ))
}

/// Bivariate variant of the alternating product formula, grading by `del_B`
/// as the candidate deletion statistic. Exploratory: the report records
/// whether the refinement holds, nothing downstream depends on it.
pub fn verify_a_equidistribution_bivariate(
    m: usize,
    budget: u128,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut len_sum = QtPoly::zero();
    let mut rmaj_sum = QtPoly::zero();
    for w in Group::A.enumerate_budgeted(m, budget)? {
        let del = stats::del_b(&w) as usize;
        len_sum.add_term(stats::ell_a(&w).expect("in A") as usize, del, 1);
        rmaj_sum.add_term(stats::rmaj_l(&w).expect("A sits inside L") as usize, del, 1);
    }
    let product = alternating_length_product(m);
    let pass = len_sum == product && rmaj_sum == product;
    let counterexample = (!pass).then(|| {
        format!(
            "bivariate sums differ from the product (lengths match: {}, rmaj match: {})",
            len_sum == product,
            rmaj_sum == product
        )
    });
    Ok(VerificationReport {
        identity: "a_equidist_bivariate".into(),
        params: format!("m={m} del:=del_B (candidate)"),
        pass,
        cases: 1,
        sides: vec![
            ReportSide {
                label: "ell_A/del sum".into(),
                poly: len_sum.to_string(),
            },
            ReportSide {
                label: "rmaj/del sum".into(),
                poly: rmaj_sum.to_string(),
            },
            ReportSide {
                label: "product".into(),
                poly: product.to_string(),
            },
        ],
        counterexample,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Closed-form lengths against breadth-first Cayley-graph distances, plus
/// the canonical-word characterization of `ell_A`.
pub fn verify_length_oracles(m: usize, budget: u128) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut cases = 0u64;
    let mut failure: Option<String> = None;

    let mut record = |ok: bool, detail: &dyn Fn() -> String| {
        if !ok && failure.is_none() {
            failure = Some(detail());
        }
    };

    // ell_B against BFS over {s_0, ..., s_{m-1}}.
    let b_dist = oracle::bfs_lengths(m, &oracle::b_generators(m));
    for sigma in Group::B.enumerate_budgeted(m, budget)? {
        let bfs = b_dist[&sigma];
        record(stats::ell_b(&sigma) == bfs, &|| {
            format!(
                "ell_B({sigma}) = {} but BFS distance is {bfs}",
                stats::ell_b(&sigma)
            )
        });
    }
    cases += 1;

    // ell_D against BFS over {s_0 s_1 s_0, s_1, ..., s_{m-1}}.
    if m >= 2 {
        let d_dist = oracle::bfs_lengths(m, &oracle::d_generators(m));
        record(d_dist.len() as u128 == Group::D.order(m)?, &|| {
            "D generators do not span D".into()
        });
        for sigma in Group::D.enumerate_budgeted(m, budget)? {
            let bfs = d_dist[&sigma];
            record(stats::ell_d(&sigma) == Some(bfs), &|| {
                format!(
                    "ell_D({sigma}) = {:?} but BFS distance is {bfs}",
                    stats::ell_d(&sigma)
                )
            });
        }
        cases += 1;
    }

    // ell_A = ell_S - del_B = canonical word length on A_m.
    for w in Group::A.enumerate_budgeted(m, budget)? {
        let ell = stats::ell_a(&w).expect("in A");
        let from_lengths = stats::ell_s(&w).expect("in A") - stats::del_b(&w);
        let word_len = canonical(Style::A, &w)?.flattened().len() as u64;
        record(ell == from_lengths && ell == word_len, &|| {
            format!("ell_A({w}) = {ell}, ell_S - del = {from_lengths}, word length {word_len}")
        });
    }
    cases += 1;

    Ok(VerificationReport {
        identity: "length_oracles".into(),
        params: format!("m={m}"),
        pass: failure.is_none(),
        cases,
        sides: Vec::new(),
        counterexample: failure,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Canonical presentations, the involution and the factorization laws,
/// bundled into one exhaustive run at degree `m`.
pub fn verify_structure(m: usize, budget: u128) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut cases = 0u64;
    let mut failure: Option<String> = None;
    let mut check = |name: &str, outcome: std::result::Result<(), String>| {
        cases += 1;
        if failure.is_none() {
            if let Err(detail) = outcome {
                failure = Some(format!("{name}: {detail}"));
            }
        }
    };

    let styles: Vec<Style> = [Style::S, Style::B, Style::A, Style::L]
        .into_iter()
        .filter(|style| match style {
            Style::A => m >= 3,
            Style::L => m >= 2,
            _ => true,
        })
        .collect();

    for &style in &styles {
        check(
            &format!("counting identity ({})", style.name()),
            counting_identity(style, m),
        );
        check(
            &format!("product-map bijectivity ({})", style.name()),
            product_map_bijective(style, m, budget),
        );
        check(
            &format!("roundtrip ({})", style.name()),
            roundtrip(style, m, budget),
        );
    }
    check("B words reduced", b_words_reduced(m, budget));
    check("B restricts to S", b_restricts_to_s(m, budget));
    if m >= 2 {
        check("L restricts to A", l_restricts_to_a(m, budget));
    }
    check("phi laws", phi_laws(m, budget));
    if m >= 2 {
        check("factorization laws", factorization_laws(m, budget));
        check("factorization uniqueness", factorization_unique(m, budget));
        check("descent-free representatives", descent_free_reps(m, budget));
        check("coset decomposition", coset_decomposition(m, budget));
    }
    check("increasing-word laws", increasing_word_laws(m, budget));
    check("left s_1 invariance", left_s1_invariance(m, budget));
    if m >= 3 {
        check("A-descents differ from window descents", {
            des_a_window_witness(m, budget).map(|_| ())
        });
    }

    Ok(VerificationReport {
        identity: "structure".into(),
        params: format!("m={m}"),
        pass: failure.is_none(),
        cases,
        sides: Vec::new(),
        counterexample: failure,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

type CheckOutcome = std::result::Result<(), String>;

fn counting_identity(style: Style, m: usize) -> CheckOutcome {
    let product: u128 = style
        .family_range(m)
        .map(|j| {
            family(style, j, m)
                .map(|f| f.len() as u128)
                .unwrap_or_default()
        })
        .product();
    let order = style.group().order(m).map_err(|e| e.to_string())?;
    if product == order {
        Ok(())
    } else {
        Err(format!("family sizes multiply to {product}, group order is {order}"))
    }
}

fn product_map_bijective(style: Style, m: usize, budget: u128) -> CheckOutcome {
    // Evaluate every factor combination; the multiset must hit the group
    // exactly once each. L_2 factor words live at degree 3, so compare
    // against the embedded group there.
    let word_degree = if style == Style::L { m.max(3) } else { m };
    let mut partial = vec![SignedPermutation::identity(word_degree).unwrap()];
    for j in style.family_range(m) {
        let fam = family(style, j, m).map_err(|e| e.to_string())?;
        let evaluated: Vec<SignedPermutation> = fam.iter().map(|w| w.eval()).collect();
        let mut next = Vec::with_capacity(partial.len() * evaluated.len());
        for acc in &partial {
            for g in &evaluated {
                next.push(acc.compose(g));
            }
        }
        partial = next;
    }
    let mut products: BTreeSet<SignedPermutation> = BTreeSet::new();
    for e in partial {
        if !products.insert(e.clone()) {
            return Err(format!("two factorizations produce {e}"));
        }
    }
    let group: BTreeSet<SignedPermutation> = style
        .group()
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
        .map(|g| {
            if word_degree == m {
                g
            } else {
                g.embed(word_degree).unwrap()
            }
        })
        .collect();
    if products == group {
        Ok(())
    } else {
        Err("factor products do not cover the group exactly".into())
    }
}

fn roundtrip(style: Style, m: usize, budget: u128) -> CheckOutcome {
    for g in style
        .group()
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let pres = canonical(style, &g).map_err(|e| e.to_string())?;
        let expect = if style == Style::L && m == 2 {
            g.embed(3).unwrap()
        } else {
            g.clone()
        };
        if pres.eval() != expect {
            return Err(format!("presentation of {g} evaluates to {}", pres.eval()));
        }
    }
    Ok(())
}

fn b_words_reduced(m: usize, budget: u128) -> CheckOutcome {
    for sigma in Group::B
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let pres = canonical(Style::B, &sigma).map_err(|e| e.to_string())?;
        if !is_reduced_b(pres.flattened()).map_err(|e| e.to_string())? {
            return Err(format!(
                "B word of {sigma} has {} letters, ell_B is {}",
                pres.flattened().len(),
                stats::ell_b(&sigma)
            ));
        }
    }
    Ok(())
}

fn b_restricts_to_s(m: usize, budget: u128) -> CheckOutcome {
    for w in Group::S
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let b = canonical(Style::B, &w).map_err(|e| e.to_string())?;
        if !b.factors()[0].is_empty() {
            return Err(format!("B presentation of unsigned {w} uses s_0"));
        }
        if m >= 2 {
            let s = canonical(Style::S, &w).map_err(|e| e.to_string())?;
            if &b.factors()[1..] != s.factors() {
                return Err(format!("B and S factors of {w} differ"));
            }
        }
    }
    Ok(())
}

fn l_restricts_to_a(m: usize, budget: u128) -> CheckOutcome {
    if m < 3 {
        return Ok(()); // A_2 is trivial and L_2 words live at degree 3
    }
    for v in Group::A
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let l = canonical(Style::L, &v).map_err(|e| e.to_string())?;
        let a = canonical(Style::A, &v).map_err(|e| e.to_string())?;
        if !l.factors()[0].is_empty() || &l.factors()[1..] != a.factors() {
            return Err(format!("L and A factors of {v} differ"));
        }
    }
    Ok(())
}

fn phi_laws(m: usize, budget: u128) -> CheckOutcome {
    for sigma in Group::B
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let image = phi(&sigma);
        if phi(&image) != sigma {
            return Err(format!("phi^2({sigma}) != {sigma}"));
        }
        if stats::maj_b(&sigma) != stats::rmaj_b(&image) {
            return Err(format!("maj_B({sigma}) != rmaj_B(phi)"));
        }
        if stats::neg_inv_set(&sigma) != stats::neg_inv_set(&image) {
            return Err(format!("Neg(sigma^-1) not preserved at {sigma}"));
        }
        if Group::D.contains(&sigma) != Group::D.contains(&image) {
            return Err(format!("phi does not restrict to D at {sigma}"));
        }
    }
    Ok(())
}

fn factorization_laws(m: usize, budget: u128) -> CheckOutcome {
    for pi in Group::L
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let f = descent_free_factor(&pi).map_err(|e| e.to_string())?;
        for (law, ok) in f.laws(&pi) {
            if !ok {
                return Err(format!("{law} fails at {pi}"));
            }
        }
    }
    Ok(())
}

fn factorization_unique(m: usize, budget: u128) -> CheckOutcome {
    let t = descent_free_set(m).map_err(|e| e.to_string())?;
    for pi in Group::L
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let matches = t
            .iter()
            .filter(|sigma| Group::A.contains(&sigma.inverse().compose(&pi)))
            .count();
        if matches != 1 {
            return Err(format!("{matches} descent-free factorizations of {pi}"));
        }
    }
    Ok(())
}

fn descent_free_reps(m: usize, _budget: u128) -> CheckOutcome {
    // Exactly one descent-free sigma per subset of {1, ..., m}.
    let t = descent_free_set(m).map_err(|e| e.to_string())?;
    let mut by_set: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for sigma in &t {
        *by_set.entry(stats::neg_inv_set(sigma)).or_default() += 1;
    }
    if t.len() != 1 << m {
        return Err(format!("|T| = {} instead of 2^{m}", t.len()));
    }
    if by_set.len() != 1 << m || by_set.values().any(|&c| c != 1) {
        return Err("Neg(sigma^{-1}) does not hit every subset exactly once".into());
    }
    Ok(())
}

fn coset_decomposition(m: usize, budget: u128) -> CheckOutcome {
    let t = descent_free_set(m).map_err(|e| e.to_string())?;
    let alternating: Vec<SignedPermutation> = Group::A
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
        .collect();
    let l_elements: Vec<SignedPermutation> = Group::L
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
        .collect();
    for b_mask in 0u32..1 << m {
        let mut union: BTreeSet<SignedPermutation> = BTreeSet::new();
        for sigma in &t {
            let mask = stats::neg_inv_set(sigma)
                .iter()
                .fold(0u32, |acc, &i| acc | 1 << (i - 1));
            if mask & !b_mask != 0 {
                continue;
            }
            for u in &alternating {
                if !union.insert(sigma.compose(u)) {
                    return Err(format!("cosets overlap for B mask {b_mask:#b}"));
                }
            }
        }
        let direct: BTreeSet<SignedPermutation> = l_elements
            .iter()
            .filter(|pi| {
                let mask = stats::neg_inv_set(pi)
                    .iter()
                    .fold(0u32, |acc, &i| acc | 1 << (i - 1));
                mask & !b_mask == 0
            })
            .cloned()
            .collect();
        if union != direct {
            return Err(format!("coset union misses elements for B mask {b_mask:#b}"));
        }
    }
    Ok(())
}

fn increasing_word_laws(m: usize, budget: u128) -> CheckOutcome {
    // sigma' ranges over the ascending windows (one per sign pattern).
    let unsigned: Vec<SignedPermutation> = Group::S
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
        .collect();
    for pattern in 0u32..1 << m {
        let letters: Vec<i32> = (1..=m as i32)
            .map(|i| {
                if pattern >> (i - 1) & 1 == 1 {
                    -i
                } else {
                    i
                }
            })
            .collect();
        let mut sorted = letters;
        sorted.sort_unstable();
        let increasing = SignedPermutation::from_window(sorted).expect("valid window");
        for v in &unsigned {
            let product = increasing.compose(v);
            if stats::inv(&product) != stats::inv(v) {
                return Err(format!("inv({increasing} * {v}) != inv(v)"));
            }
            if stats::del_b(&product) != stats::del_b(v) {
                return Err(format!("del_B({increasing} * {v}) != del_B(v)"));
            }
            if stats::ell_l(&product) != stats::ell_l(&increasing) + stats::ell_l(v) {
                return Err(format!("ell_L not additive at {increasing} * {v}"));
            }
        }
    }
    Ok(())
}

fn left_s1_invariance(m: usize, budget: u128) -> CheckOutcome {
    if m < 2 {
        return Ok(());
    }
    let s1 = SignedPermutation::s_gen(m, 1).map_err(|e| e.to_string())?;
    for rho in Group::S
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        if stats::ell_l(&s1.compose(&rho)) != stats::ell_l(&rho) {
            return Err(format!("ell_L(s_1 {rho}) != ell_L({rho})"));
        }
    }
    Ok(())
}

/// Smallest element of `L_m` whose A-descent set differs from the naive
/// window-descent set; exists for every `m >= 3`.
pub fn des_a_window_witness(m: usize, budget: u128) -> std::result::Result<String, String> {
    for pi in Group::L
        .enumerate_budgeted(m, budget)
        .map_err(|e| e.to_string())?
    {
        let actual = stats::des_a_set(&pi);
        let naive: Vec<usize> = (1..m)
            .filter(|&i| pi.window()[i - 1] > pi.window()[i])
            .filter(|&i| i <= m - 2)
            .collect();
        if actual != naive {
            return Ok(format!(
                "Des_A({pi}) = {actual:?} but the window descends at {naive:?}"
            ));
        }
    }
    Err("no witness found".into())
}

/// Negative control: replace the non-strict comparison in the A-descent set
/// by a strict one and rerun the subset identity. The control passes when
/// the mutation is detected (some subset sum stops matching the product).
pub fn verify_descent_mutation(m: usize, budget: u128) -> Result<VerificationReport> {
    let started = Instant::now();
    let elements: Vec<SignedPermutation> = Group::L.enumerate_budgeted(m, budget)?.collect();
    let mut cases = 0u64;
    let mut detection: Option<String> = None;
    for b in subset_sample(m, 0) {
        cases += 1;
        let b_mask = mask_of(&b);
        let mut mutated_sum = QPoly::zero();
        for pi in &elements {
            let mask = stats::neg_inv_set(pi)
                .iter()
                .fold(0u32, |acc, &i| acc | 1 << (i - 1));
            if mask & !b_mask != 0 {
                continue;
            }
            mutated_sum.add_term(nrmaj_l_strict_mutant(pi) as usize, 1);
        }
        let b_list: Vec<usize> = b.iter().copied().collect();
        let product = subset_length_product(&b_list, m);
        if mutated_sum != product && detection.is_none() {
            let witness = elements
                .iter()
                .find(|pi| des_a_set_strict_mutant(pi) != stats::des_a_set(pi))
                .map(|pi| format!("{pi}"))
                .unwrap_or_default();
            detection = Some(format!(
                "strict-descent mutant breaks B={} ({}); first diverging window: {witness}",
                set_text(&b),
                first_mismatch("mutant sum", &mutated_sum, "product", &product)
            ));
        }
    }
    Ok(VerificationReport {
        identity: "descent_mutation_control".into(),
        params: format!("m={m} mutant: Des_A uses < instead of <="),
        pass: detection.is_some(),
        cases,
        sides: Vec::new(),
        counterexample: detection,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// The deliberately wrong A-descent set (strict comparison).
fn des_a_set_strict_mutant(pi: &SignedPermutation) -> Vec<usize> {
    let m = pi.degree();
    if m < 3 {
        return Vec::new();
    }
    let base = stats::ell_l(pi);
    (1..=m - 2)
        .filter(|&i| {
            let a_i = SignedPermutation::a_gen(m, i).expect("index in range");
            stats::ell_l(&pi.compose(&a_i)) < base
        })
        .collect()
}

fn nrmaj_l_strict_mutant(pi: &SignedPermutation) -> u64 {
    let n = pi.degree() as u64 - 1;
    let rmaj: u64 = des_a_set_strict_mutant(pi)
        .iter()
        .map(|&i| n - i as u64)
        .sum();
    rmaj + stats::neg_inv_set(pi).iter().map(|&i| i as u64).sum::<u64>()
}

/// Which families of checks to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum CheckId {
    LEquidist,
    LEquidistExact,
    LdEquidist,
    DEquidist,
    AEquidist,
    AEquidistBivariate,
    Structure,
    LengthOracles,
    DescentMutationControl,
}

impl CheckId {
    pub const DEFAULT: [CheckId; 8] = [
        CheckId::LEquidist,
        CheckId::LEquidistExact,
        CheckId::LdEquidist,
        CheckId::DEquidist,
        CheckId::AEquidist,
        CheckId::Structure,
        CheckId::LengthOracles,
        CheckId::DescentMutationControl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::LEquidist => "l_equidist",
            CheckId::LEquidistExact => "l_equidist_exact",
            CheckId::LdEquidist => "ld_equidist",
            CheckId::DEquidist => "d_equidist",
            CheckId::AEquidist => "a_equidist",
            CheckId::AEquidistBivariate => "a_equidist_bivariate",
            CheckId::Structure => "structure",
            CheckId::LengthOracles => "length_oracles",
            CheckId::DescentMutationControl => "descent_mutation_control",
        }
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            CheckId::LEquidist,
            CheckId::LEquidistExact,
            CheckId::LdEquidist,
            CheckId::DEquidist,
            CheckId::AEquidist,
            CheckId::AEquidistBivariate,
            CheckId::Structure,
            CheckId::LengthOracles,
            CheckId::DescentMutationControl,
        ];
        all.into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::BadWordAlphabet(format!("`{s}` is not a known check id")))
    }
}

/// Options for a full verification run.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest degree to test, inclusive.
    pub max_degree: usize,
    /// Seed for the subset sample at degrees with more than 32 subsets.
    pub seed: u64,
    pub budget: u128,
    pub checks: Vec<CheckId>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: 5,
            seed: 0,
            budget: DEFAULT_BUDGET,
            checks: CheckId::DEFAULT.to_vec(),
        }
    }
}

/// Runs the requested checks over degrees `2..=max_degree`. Checks are
/// independent and run on the rayon pool; the report order is canonical
/// (check id, then degree, then subset) regardless of parallelism.
pub fn verify_all(options: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    type Job = Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>;
    let mut jobs: Vec<Job> = Vec::new();
    let budget = options.budget;
    for &check in &options.checks {
        for m in 2..=options.max_degree {
            let seed = options.seed;
            match check {
                CheckId::LEquidist => jobs.push(Box::new(move || {
                    verify_l_equidistribution_sweep(m, &subset_sample(m, seed), budget)
                })),
                CheckId::LEquidistExact => jobs.push(Box::new(move || {
                    verify_l_equidistribution_exact_sweep(m, &subset_sample(m, seed), budget)
                })),
                CheckId::LdEquidist => {
                    jobs.push(Box::new(move || {
                        Ok(vec![verify_ld_equidistribution(m, budget)?])
                    }));
                }
                CheckId::DEquidist => {
                    jobs.push(Box::new(move || {
                        Ok(vec![verify_d_equidistribution(m, budget)?])
                    }));
                }
                CheckId::AEquidist => {
                    jobs.push(Box::new(move || {
                        Ok(vec![verify_a_equidistribution(m, budget)?])
                    }));
                }
                CheckId::AEquidistBivariate => {
                    jobs.push(Box::new(move || {
                        Ok(vec![verify_a_equidistribution_bivariate(m, budget)?])
                    }));
                }
                CheckId::Structure => {
                    jobs.push(Box::new(move || Ok(vec![verify_structure(m, budget)?])));
                }
                CheckId::LengthOracles => {
                    jobs.push(Box::new(move || {
                        Ok(vec![verify_length_oracles(m, budget)?])
                    }));
                }
                CheckId::DescentMutationControl => {
                    if (3..=5).contains(&m) {
                        jobs.push(Box::new(move || {
                            Ok(vec![verify_descent_mutation(m, budget)?])
                        }));
                    }
                }
            }
        }
    }
    let nested: Result<Vec<Vec<VerificationReport>>> =
        jobs.par_iter().map(|job| job()).collect();
    Ok(nested?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(values: &[usize]) -> BTreeSet<usize> {
        values.iter().copied().collect()
    }

    #[test]
    fn gf_examples() {
        // 4-element enumeration oracle for L_2 constrained to {1,2}.
        let query = GfQuery {
            group: Group::L,
            degree: 2,
            stat: Statistic::EllL,
            constraint: NegConstraint::SubsetOf(set(&[1, 2])),
        };
        let gf = generating_function(&query, DEFAULT_BUDGET).unwrap();
        assert_eq!(gf, QPoly::from_coeffs(vec![1, 1, 1, 1]));

        // Counting specialization: the ell_B sum over B_4 at q=1 is |B_4|.
        let query = GfQuery {
            group: Group::B,
            degree: 4,
            stat: Statistic::EllB,
            constraint: NegConstraint::None,
        };
        let gf = generating_function(&query, DEFAULT_BUDGET).unwrap();
        assert_eq!(gf.eval_at_one() as u128, Group::B.order(4).unwrap());

        // nrmaj_L over L_5 constrained to {1,3} equals the product formula.
        let query = GfQuery {
            group: Group::L,
            degree: 5,
            stat: Statistic::NrmajL,
            constraint: NegConstraint::SubsetOf(set(&[1, 3])),
        };
        let gf = generating_function(&query, DEFAULT_BUDGET).unwrap();
        assert_eq!(gf, subset_length_product(&[1, 3], 5));
    }

    #[test]
    fn gf_rejects_undefined_pairs_and_bad_sets() {
        let query = GfQuery {
            group: Group::B,
            degree: 3,
            stat: Statistic::EllA,
            constraint: NegConstraint::None,
        };
        assert!(matches!(
            generating_function(&query, DEFAULT_BUDGET),
            Err(Error::UndefinedStatistic { .. })
        ));
        let query = GfQuery {
            group: Group::L,
            degree: 3,
            stat: Statistic::EllL,
            constraint: NegConstraint::SubsetOf(set(&[4])),
        };
        assert!(matches!(
            generating_function(&query, DEFAULT_BUDGET),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn subset_counts_are_consistent() {
        // Summing exact-subset counts over all C ⊆ B reproduces the
        // subset-constrained count.
        let m = 3;
        for b_mask in 0u32..8 {
            let b: BTreeSet<usize> =
                (1..=m).filter(|i| b_mask >> (i - 1) & 1 == 1).collect();
            let subset = generating_function(
                &GfQuery {
                    group: Group::L,
                    degree: m,
                    stat: Statistic::EllL,
                    constraint: NegConstraint::SubsetOf(b.clone()),
                },
                DEFAULT_BUDGET,
            )
            .unwrap();
            let mut exact_total = QPoly::zero();
            for c_mask in 0u32..8 {
                if c_mask & !b_mask != 0 {
                    continue;
                }
                let c: BTreeSet<usize> =
                    (1..=m).filter(|i| c_mask >> (i - 1) & 1 == 1).collect();
                let exact = generating_function(
                    &GfQuery {
                        group: Group::L,
                        degree: m,
                        stat: Statistic::EllL,
                        constraint: NegConstraint::EqualTo(c),
                    },
                    DEFAULT_BUDGET,
                )
                .unwrap();
                exact_total = &exact_total + &exact;
            }
            assert_eq!(subset, exact_total, "B mask {b_mask:#b}");
        }
    }

    #[test]
    fn l_equidistribution_small() {
        let report = verify_l_equidistribution(2, &set(&[]), DEFAULT_BUDGET).unwrap();
        assert!(report.pass, "{report:?}");
        for b_mask in 0u32..16 {
            let b: BTreeSet<usize> = (1..=4).filter(|i| b_mask >> (i - 1) & 1 == 1).collect();
            let report = verify_l_equidistribution(4, &b, DEFAULT_BUDGET).unwrap();
            assert!(report.pass, "B mask {b_mask:#b}: {report:?}");
        }
    }

    #[test]
    fn exact_subset_identity_small() {
        let report = verify_l_equidistribution_exact(3, &set(&[2]), DEFAULT_BUDGET).unwrap();
        assert!(report.pass);
        let report = verify_l_equidistribution_exact(2, &set(&[]), DEFAULT_BUDGET).unwrap();
        assert!(report.pass);
        // Only the identity-signed elements contribute to B = {}.
        assert_eq!(report.sides[0].poly, "1");
    }

    #[test]
    fn group_identities_small() {
        assert!(verify_ld_equidistribution(3, DEFAULT_BUDGET).unwrap().pass);
        assert!(verify_d_equidistribution(3, DEFAULT_BUDGET).unwrap().pass);
        assert!(verify_a_equidistribution(4, DEFAULT_BUDGET).unwrap().pass);
        assert!(verify_length_oracles(3, DEFAULT_BUDGET).unwrap().pass);
        assert!(verify_structure(3, DEFAULT_BUDGET).unwrap().pass);
    }

    #[test]
    fn mutation_control_detects_the_strict_variant() {
        let report = verify_descent_mutation(3, DEFAULT_BUDGET).unwrap();
        assert!(report.pass, "{report:?}");
        assert!(report.counterexample.is_some());
    }

    #[test]
    fn witness_exists_at_degree_3() {
        assert!(des_a_window_witness(3, DEFAULT_BUDGET).is_ok());
    }

    #[test]
    fn subset_sample_is_deterministic() {
        let a = subset_sample(6, 7);
        let b = subset_sample(6, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 32);
        assert_eq!(subset_sample(4, 0).len(), 16);
        assert_ne!(subset_sample(6, 7), subset_sample(6, 8));
    }

    #[test]
    fn verify_all_small_run() {
        let options = VerifyOptions {
            max_degree: 3,
            ..VerifyOptions::default()
        };
        let reports = verify_all(&options).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.pass), "{reports:#?}");
        // Deterministic ordering.
        let again = verify_all(&options).unwrap();
        let ids: Vec<_> = reports.iter().map(|r| (&r.identity, &r.params)).collect();
        let ids_again: Vec<_> = again.iter().map(|r| (&r.identity, &r.params)).collect();
        assert_eq!(ids, ids_again);
    }
}
