//! Error type shared across the crate.

use thiserror::Error;

use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Windows must have at least one entry.
    #[error("degree must be at least 1")]
    ZeroDegree,

    /// A window entry violates the signed-permutation invariants. Positions
    /// are 1-based so they can be quoted back to the user verbatim.
    #[error("entry {position}: {reason}")]
    InvalidWindow { position: usize, reason: String },

    /// A generator token does not exist at the stated degree.
    #[error("token `{token}` is out of range for degree {degree}")]
    TokenOutOfRange { token: String, degree: usize },

    /// A word token could not be parsed at all.
    #[error("token {position}: `{token}` is not a generator token")]
    UnknownToken { position: usize, token: String },

    /// An operation required membership in a group the element is not in.
    #[error("window {window} is not a member of {group}")]
    NotAMember { window: String, group: Group },

    /// An operation is only defined from some minimal degree upward.
    #[error("{what} requires degree at least {min}, got {got}")]
    DegreeTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    /// An index set contained a value outside `{1, ..., m}`.
    #[error("index {value} is outside 1..={degree}")]
    IndexOutOfRange { value: usize, degree: usize },

    /// A factor-family index `j` does not exist for the style at the degree.
    #[error("family index {j} is out of range for style {style} at degree {degree}")]
    FamilyOutOfRange {
        style: &'static str,
        j: usize,
        degree: usize,
    },

    /// Enumerating the requested group would exceed the element budget.
    #[error("|{group}_{degree}| = {size} exceeds the enumeration budget {budget}")]
    BudgetExceeded {
        group: Group,
        degree: usize,
        size: u128,
        budget: u128,
    },

    /// A statistic is not defined on every element of the queried group.
    #[error("statistic {stat} is not defined on all of {group}_{degree}")]
    UndefinedStatistic {
        stat: String,
        group: Group,
        degree: usize,
    },

    /// A word contained tokens outside the expected alphabet.
    #[error("{0}")]
    BadWordAlphabet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
