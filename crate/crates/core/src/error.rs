use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime characteristic")]
    NotPrime(u64),
    #[error("characteristic {0} exceeds the supported range (< 2^31)")]
    CharacteristicTooLarge(u64),
    #[error("duplicate or clashing name `{0}`")]
    NameClash(String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("the unit ideal has no Krull dimension")]
    EmptyRing,
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("relation ideal is the unit ideal")]
    UnitRelation,
    #[error("{given} elements exceed the ring dimension {dim}")]
    TooManyElements { given: usize, dim: usize },
    #[error("coefficient field has parameters; Frobenius is not an algebra endomorphism over it")]
    NonPerfectCoefficients,
    #[error("every partial derivative of the relations vanishes")]
    EmptyJacobian,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,
    #[error("multiplier is zero or lies in a minimal prime")]
    NotAdmissible,
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
}
