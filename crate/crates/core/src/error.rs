use crate::exact_linalg::Rational;
use crate::graph_model::Violation;

/// Everything that can go wrong in the library.
///
/// Conditions under which a closed form does not apply (a vanishing
/// cofactor, `lambda = 0`, ...) are errors rather than panics so that the
/// CLI can surface them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular (determinant {det})")]
    Singular { det: Rational },

    #[error("aI + bJ is singular for n = {n}, a = {a}, b = {b}")]
    SingularFamily { n: usize, a: Box<Rational>, b: Box<Rational> },

    #[error("invalid multipartite spec: {0}")]
    InvalidSpec(String),

    #[error("invalid multi-block graph: {}", render_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("cof D vanishes for block {block} (parts {parts}); lambda and mu are undefined")]
    ZeroCofactor { block: usize, parts: String },

    #[error("det D vanishes (beta = 0) for parts {parts}")]
    ZeroDeterminant { parts: String },

    #[error("lambda = 0: det D(G) = lambda * cof D(G) = 0, the distance matrix is singular")]
    ZeroLambda,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("identity {name} failed: {detail}")]
    IdentityFailure { name: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
