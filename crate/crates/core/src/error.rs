use thiserror::Error;

/// Errors raised by the library. Numerical check *failures* are reported in
/// result structs; these variants are reserved for invalid inputs and
/// constructions that cannot proceed.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p = {p} and q = {q} are not coprime (gcd = {gcd})")]
    NotCoprime { p: usize, q: usize, gcd: usize },

    #[error("cutoff p/q = {p}/{q} out of range: need p >= 1 and 2p <= q")]
    OutOfRange { p: usize, q: usize },

    #[error("support set is empty")]
    EmptySupport,

    #[error("invalid support set: {0}")]
    InvalidSupport(String),

    #[error("no support element is <= {bound}")]
    EmptyTruncation { bound: usize },

    #[error("no closed form is known for A({p}/{q})")]
    UnsupportedCase { p: usize, q: usize },

    #[error("linear system is numerically singular (residual {residual:e})")]
    SingularSystem { residual: f64 },

    #[error("gamma coefficient {index} = {value:e} is not positive")]
    NonPositiveGamma { index: usize, value: f64 },

    #[error("grid of {grid} points is too coarse, need at least {required}")]
    GridTooSmall { grid: usize, required: usize },

    #[error("malformed LP: {0}")]
    MalformedProblem(String),

    #[error("LP solver stopped with status {0:?}")]
    Solver(crate::lp::LpStatus),

    #[error("no polynomial of degree <= {degree} vanishes to within {eps:e} on the grid")]
    EpsTooSmall { degree: usize, eps: f64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("first set is not a subset of the second")]
    NotASubset,
}

pub type Result<T> = std::result::Result<T, Error>;
