use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 32 bits")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("elimination subset must be nonempty and proper")]
    EmptyOrFullSubset,
    #[error("elimination subset is empty")]
    EmptySubset,
    #[error("component {comp} out of range for rank {rank}")]
    ComponentOutOfRange { comp: usize, rank: usize },
    #[error("invalid ordering: {0}")]
    Invalid(String),
}

/// Rejections of an algebra presentation. Generator indices are 0-based;
/// `j > i` throughout.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator names must be distinct and nonempty")]
    BadNames,
    #[error("relation table is missing the pair ({j}, {i})")]
    IncompleteRelationTable { j: usize, i: usize },
    #[error("relation ({j}, {i}) has a coefficient or exponent of the wrong shape")]
    MalformedRelation { j: usize, i: usize },
    #[error("lambda for relation ({j}, {i}) is zero")]
    ZeroLambda { j: usize, i: usize },
    #[error("leading monomial of f for relation ({j}, {i}) is not below a_i a_j")]
    LeadingMonomialNotSmaller { j: usize, i: usize },
    #[error("overlap ({k}, {j}, {i}) is inconsistent: {left} != {right}")]
    OverlapInconsistent {
        k: usize,
        j: usize,
        i: usize,
        left: String,
        right: String,
    },
    #[error("algebras live over different fields")]
    FieldMismatch,
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("elements belong to different free modules")]
    ModuleMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// The subalgebra generated by `U` is not spanned by the monomials in `U`:
/// the relation `(j, i)` produces `monomial` outside of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureFailure {
    pub j: usize,
    pub i: usize,
    pub monomial: crate::monomial::Exponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("subalgebra is not closed: relation ({}, {}) leaves the kept generators via {:?}", .0.j, .0.i, .0.monomial)]
    ClosureFailure(ClosureFailure),
    #[error("the basis ordering does not eliminate with respect to the requested sub-basis")]
    OrderingNotEliminatingForS,
    #[error("the zero ideal has full dimension")]
    ZeroIdeal,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(
        "homomorphism is not well defined: relation {0} does not map into the target relations"
    )]
    HomNotWellDefined(usize),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("image {index} has rank {got}, target rank is {expected}")]
    ImageRank {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Elimination(#[from] EliminationError),
}
