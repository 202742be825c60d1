//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by group operations, form conversions and rewriting.
///
/// Parse failures have their own positioned type, [`crate::text::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The rank is below 2 or above [`crate::perm::MAX_RANK`].
    #[error("rank {0} is outside the supported range 2..={max}", max = crate::perm::MAX_RANK)]
    InvalidRank(usize),

    /// Two operands of a binary operation have different ranks.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// An image array does not describe a signed permutation of `±1..±n`.
    #[error("images {0:?} do not form a signed permutation of ±1..±n")]
    NotSignedPermutation(Vec<i32>),

    /// A generator index does not fit the rank.
    #[error("{what} index {index} is out of range for rank {n}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        n: usize,
    },

    /// A canonical-form exponent violates its bound.
    #[error("exponent {exp} of {what} is out of range")]
    ExponentOutOfRange { what: String, exp: u64 },

    /// The element has an odd number of negative images.
    #[error("{0} has an odd number of negative images and is not in D_n")]
    NotInD(String),

    /// The element has a negative image but an unsigned permutation was required.
    #[error("{0} has negative images and is not in S_n")]
    NotInS(String),

    /// The unsigned projection of the element is not the identity.
    #[error("{0} does not project to the identity permutation")]
    NotInIdBullet(String),

    /// A form that must be elementary is not.
    #[error("form {0} is not elementary")]
    NotElementary(String),

    /// The arguments of an exchange law or lemma fall outside its range.
    #[error("{law}: {detail}")]
    LawPrecondition { law: &'static str, detail: String },

    /// A brute-force routine was asked to run at a rank beyond its guard.
    #[error("{what} supports ranks up to {max}, got {n}")]
    RankTooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    /// `verify_suite` was given an unknown suite name.
    #[error("unknown verification suite {0:?} (expected one of bijection, exchange-laws, length, decomposition, subgroups)")]
    UnknownSuite(String),
}

/// Result alias using [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
