use thiserror::Error;

use crate::rational::UnitRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} lies outside [0,1]")]
    OutOfUnitInterval(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid t-norm: {0}")]
    InvalidTNorm(String),

    #[error("invalid interval set: {0}")]
    InvalidIntervalSet(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("categories are enriched over different t-norms")]
    TNormMismatch,

    /// The exact answer is irrational; the `*_enclosure` operations bracket it.
    #[error("{what} is irrational (inside a product block)")]
    ProductIrrational { what: String },

    #[error("{candidates} candidate maps exceed the size cap {cap}")]
    SizeLimit { candidates: String, cap: u64 },

    #[error("no fixpoint after {rounds} rounds")]
    Nontermination { rounds: usize },

    #[error("{value} is outside the domain: {reason}")]
    Domain { value: UnitRational, reason: String },

    #[error("sequence is not forward Cauchy")]
    NotCauchy,

    #[error("structure value {value} is not in M")]
    NotMValued { value: UnitRational },

    /// Carries `[u, v, r]`.
    #[error("identity holds at (u,v,r) = ({}, {}, {}); no witness", .at[0], .at[1], .at[2])]
    InvalidWitness { at: Box<[UnitRational; 3]> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown point {0:?}")]
    UnknownPoint(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
