//! Signed permutation groups and their MacMahon-type statistics.
//!
//! This crate implements, with exact integer arithmetic throughout:
//!
//! * the hyperoctahedral group `B_m` of signed permutations in window
//!   notation, with the subgroups `S_m`, `A_m`, `D_m` (even sign changes),
//!   `L_m = C_2 wr A_m` (signed even permutations) and `(L ∩ D)_m`
//!   ([`perm`], [`group`]);
//! * words in the Coxeter generators `s_i` and the alternating generators
//!   `a_i`, `a_1^{-1}` ([`word`]);
//! * the length statistics `ell_B`, `ell_L`, `ell_S`, `ell_A`, `ell_D`, the
//!   descent sets `Des_S`, `Des_B`, `Des_A` and the major indices `maj_B`,
//!   `rmaj_B`, `rmaj_L`, `nrmaj_L`, `dmaj`, `drmaj` ([`stats`]);
//! * the canonical presentations of all four styles, including the
//!   recursive peel for the signed even permutations ([`canonical`]);
//! * the major-index-exchanging involution `phi` and the unique
//!   descent-free factorization `pi = sigma u` ([`structure`]);
//! * exact polynomials in `q` and `(q, t)` with the product formulas the
//!   statistics equidistribute to ([`poly`]);
//! * one-shot verification of every equidistribution identity by exhaustive
//!   enumeration at small degrees ([`verify`]).
//!
//! Run the bundled checks from the command line:
//!
//! ```text
//! signed-perms verify --all --max-n 5
//! ```
//!
//! or explore the worked examples in `examples/`.

pub mod canonical;
pub mod cli;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod structure;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use group::Group;
pub use perm::SignedPermutation;
pub use word::{GeneratorToken, GeneratorWord};
