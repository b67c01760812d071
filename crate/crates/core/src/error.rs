use thiserror::Error;

use crate::root_system::{Family, Node};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "unsupported algebra {family}{rank}: expected A_n (n>=1), D_n (n>=4) or E_6, E_7, E_8"
    )]
    UnsupportedAlgebra { family: Family, rank: usize },

    #[error("node {label} does not exist (rank {rank})")]
    InvalidNode { label: usize, rank: usize },

    #[error("weight projects to zero in the Coxeter plane")]
    ZeroProjection,

    #[error("not a solution of the fusing rule: {0}")]
    NotASolution(String),

    #[error("root system construction inconsistency: {0}")]
    Inconsistent(String),

    #[error("q-character expansion failed: {0}")]
    Expansion(String),

    #[error("q-character of node {label} exceeded the cap of {cap} monomials")]
    CapExceeded { label: usize, cap: usize },

    #[error("monomial factor Y[{label},{q}] has the wrong parity for its colour")]
    ColouringViolation { label: usize, q: i32 },

    #[error("monomial {0} does not occur in the character")]
    MonomialAbsent(String),

    #[error("invalid strip source: {0}")]
    InvalidSource(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid_node(node: Node, rank: usize) -> Self {
        Error::InvalidNode {
            label: node + 1,
            rank,
        }
    }
}
