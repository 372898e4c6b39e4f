use thiserror::Error;

use crate::seifert::Base;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("∞ + ∞ is undefined")]
    InfinitePlusInfinite,

    #[error("0/0 is not a fraction")]
    ZeroOverZero,

    #[error("continued fraction sequence is empty")]
    EmptySequence,

    #[error("{0} is undefined at ∞")]
    InfiniteArgument(&'static str),

    #[error("expected a Seifert fibered space over {expected}, got one over {found}")]
    WrongBase { expected: Base, found: Base },

    #[error("slot {index} is degenerate (∞)")]
    DegenerateSlot { index: usize },

    #[error("expected {expected} slots, got {found}")]
    SlotCount { expected: usize, found: usize },

    #[error("slot {index} = {value} is not an exceptional fiber")]
    NotExceptional { index: usize, value: String },

    #[error("zero denominator in {what} at {params}")]
    ZeroDenominator { what: &'static str, params: String },

    #[error("m·p must be 0, got m = {m}, p = {p}")]
    MpConstraint { m: i64, p: i64 },

    #[error("l must be 2 or -2, got {0}")]
    NotPlusMinusTwo(i64),

    #[error("twist count must be nonzero")]
    ZeroTwist,

    #[error("invalid range {0:?}: expected A..B with A <= B")]
    InvalidRange(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("sweep has {size} points, above the cap of {cap}")]
    BoxTooLarge { size: u64, cap: u64 },
}
