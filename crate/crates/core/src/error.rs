use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {0} occurs in no facet")]
    GhostVertex(usize),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex count {0} exceeds the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("complementarity scan needs 2^n bits; n = {n} exceeds cap {cap}")]
    ComplementarityCap { n: usize, cap: usize },
    #[error("empty facet list for a complex on {0} vertices")]
    NoFacets(usize),
    #[error("{0} is not a face")]
    NotAFace(VertexSet),
    #[error("complex is not pure of dimension {0}")]
    NotPure(isize),
    #[error("linear system for the f-vector is {0}")]
    FVectorSystem(&'static str),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={0}")]
    NotABijection(usize),
    #[error("group order exceeds the cap of {0} elements")]
    OrderCapExceeded(usize),
    #[error("subgroup order {k} does not divide group order {order}")]
    NotADivisor { k: usize, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("permutation does not preserve the facet set")]
    NotAnAction,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("face enumeration needs {needed} faces; budget is {budget}")]
    FaceCountOverflow { needed: u64, budget: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            msg: msg.into(),
        }
    }
}
