use thiserror::Error;

use crate::weights::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system label `{0}`")]
    UnknownType(String),
    #[error("rank {rank} is out of range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("dimension mismatch: expected rank {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} is not {p}^{r}-restricted")]
    NotRestricted { weight: String, p: u64, r: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("Weyl group has order {order}, above the enumeration cap {cap}")]
    WeylCapExceeded { order: u128, cap: u128 },
    #[error("missing required parameter `{0}`")]
    MissingField(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("threshold not met: {name} requires {lhs} {relation} {rhs}")]
    ThresholdNotMet {
        name: String,
        lhs: i64,
        relation: &'static str,
        rhs: i64,
    },
    #[error("search budget of {0} steps exhausted")]
    BudgetExhausted(u64),
    #[error("memo table exceeded {0} entries")]
    MemoCapExceeded(usize),
    #[error("vector {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
