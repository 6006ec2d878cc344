use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u32),
    #[error("division by zero in F_p")]
    DivisionByZero,
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("operands belong to different ring contexts")]
    ContextMismatch,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial must be non-constant")]
    ConstantPolynomial,
    #[error("polynomial is not a member of the ideal")]
    NotMember,
    #[error("exponent vector {0:?} lies outside the basis range for level {1}")]
    OutOfBasisRange(Vec<u32>, u32),
    #[error("operator level {op} exceeds requested level {requested}")]
    LevelMismatch { op: u32, requested: u32 },
    #[error("enumeration of {0} divided powers exceeds the configured limit {1}")]
    EnumerationLimit(u128, u128),
    #[error("chain has not stabilized")]
    NotStabilized,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
