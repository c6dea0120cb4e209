use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation on {n} elements exceeds the 64-element bitset capacity")]
    TooLarge { n: usize },
    #[error("index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cover relation has a cycle through elements {a} and {b}")]
    CycleDetected { a: usize, b: usize },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("poset is not a {0}")]
    NotASemilattice(&'static str),
    #[error("structure has no top element")]
    MissingTop,
    #[error("structure has no bottom element")]
    MissingBottom,
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("{u} <= {v}: a separating witness needs u not below v")]
    NotComparable { u: usize, v: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("map is not a bounded join-embedding: {0}")]
    NotAnEmbedding(String),
    #[error("embedding does not satisfy the transfer conditions (a: {cond_a}, b: {cond_b})")]
    ConditionsNotMet { cond_a: bool, cond_b: bool },
    #[error("envelope property check failed: {0}")]
    PropertyCheckFailed(String),
    #[error("set {0} is not open")]
    NotOpen(String),
    #[error("{inner} is not contained in {outer}")]
    BadInclusion { inner: String, outer: String },
    #[error("{0} is not an element of the counterexample semilattice")]
    NotInA(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
