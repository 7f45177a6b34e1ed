use thiserror::Error;

use crate::hypergraph::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no hyperedges")]
    NoHyperedges,

    #[error("invalid hypergraph: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("scale factor must be positive")]
    ZeroScale,

    #[error("isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("vertex {0} of degree < 2 yields non-simple hypergraph")]
    DegreeBelowTwo(usize),

    #[error("construction yields a non-simple hypergraph: {}", join_violations(.0))]
    NonSimpleConstruction(Vec<Violation>),

    #[error("matrix not symmetric")]
    NotSymmetric,

    #[error("matrix not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("tolerance must lie in (0, 1), got {0}")]
    BadTolerance(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("k < rt (k = {k}, r = {r}, t = {t})")]
    KBelowRt { k: usize, r: usize, t: usize },

    #[error("expansion factor t must be at least 1")]
    ZeroExpansion,

    #[error("coloring invalid: edges {0} and {1} are adjacent and share a color")]
    ColoringInvalid(usize, usize),

    #[error("not 2-regular on collar vertices (vertex {vertex} lies in {count} collar edges)")]
    NotTwoRegular { vertex: usize, count: usize },

    #[error("collar edge {edge} has cardinality {cardinality}, expected the rank {rank}")]
    CollarNotUniform {
        edge: usize,
        cardinality: usize,
        rank: usize,
    },

    #[error("hypergraph is not a collar")]
    NotACollar,

    #[error("instance exceeds search cap ({edges} edges > cap {cap})")]
    SearchCapExceeded { edges: usize, cap: usize },

    #[error("certificate check failed: B·x != 0")]
    CertificateRejected,

    #[error(
        "generator gave up after {attempts} attempts (n = {n}, m = {m}, max card = {max_card})"
    )]
    GeneratorExhausted {
        n: usize,
        m: usize,
        max_card: usize,
        attempts: usize,
    },

    #[error("bad generator parameters: {0}")]
    GeneratorParams(String),

    #[error("{message} at line {line}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
