use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the configured cap {cap}")]
    FieldTooLarge { p: u64, e: u32, cap: u64 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("{value} is not an element of GF({q})")]
    ElementOutOfRange { value: u64, q: u64 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("cannot divide by x^{power}: polynomial has degree {degree}")]
    PowerTooLarge { power: usize, degree: usize },
    #[error("generator {index} is not a monic univariate polynomial in x{var}", var = index + 1)]
    BadGenerator { index: usize },
    #[error("a Cartesian set needs at least one component")]
    NoComponents,
    #[error("component {0} is empty")]
    EmptyComponent(usize),
    #[error("component {component} lists element {value} twice")]
    DuplicateElement { component: usize, value: u32 },
    #[error("Cartesian set has {points} points, above the limit {limit}")]
    TooManyPoints { points: u128, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("component {index}: need q > n_i >= q/2, got n_i = {size} with q = {q}")]
    SizeOutOfRange { index: usize, size: usize, q: u64 },
    #[error("exponent set is empty")]
    EmptyExponentSet,
    #[error("exponent {0:?} lies outside the box")]
    ExponentOutsideBox(Vec<u32>),
    #[error("exponent {0:?} is listed twice")]
    DuplicateExponent(Vec<u32>),
    #[error("offset t_{index} = {value} is outside 0..={max}", index = index + 1)]
    OffsetOutOfRange { index: usize, value: usize, max: i64 },
    #[error("exhaustive search needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("C(S, A_t) is not dual-containing: {0}")]
    ContainmentFailed(String),
    #[error("position {0} is outside the product set")]
    PositionOutOfRange(usize),
    #[error("recovery set {set} contains an erased position")]
    RecoverySetErased { set: usize },
    #[error("recovery set {set} is inconsistent with the code: the word is not a codeword")]
    InconsistentWord { set: usize },
    #[error("invalid recovery plan: {0}")]
    InvalidPlan(String),
    #[error("matrix text: {0}")]
    MatrixFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
