use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field {p}^{e} exceeds the supported order 2^16")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("GF({q}) is too small; these constructions need q > 2")]
    FieldTooSmall { q: u32 },
    #[error("{value} is not an element of GF({q})")]
    NotAnElement { value: u32, q: u32 },
    #[error("arithmetic between GF({left}) and GF({right})")]
    MixedFields { left: u32, right: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("edge {{{0}, {0}}} is a loop")]
    Loop(usize),
    #[error("edge {{{0}, {1}}} appears twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid graph size: {0}")]
    InvalidSize(&'static str),
    #[error("graph has no edges")]
    NoEdges,

    #[error("work budget exceeded: need {required}, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected {expected} variables or coefficients, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coefficient vector contains a zero entry")]
    ZeroCoefficient,
    #[error("coefficient vector must have even length, got {0}")]
    OddLength(usize),

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
    #[error("parameter out of range: {0}")]
    OutOfRange(&'static str),
    #[error("Hilbert function did not reach |X| = {length} by degree {degree}")]
    NotSaturated { length: usize, degree: u32 },
}
