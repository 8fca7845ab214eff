use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation of zero is undefined")]
    ValuationOfZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("k = {k} does not divide q - 1 = {qm1}; no primitive k-th roots")]
    NoKthRoots { k: u64, qm1: u64 },
    #[error("field order {0} does not fit in 63 bits")]
    FieldTooLarge(u128),
    #[error("q^m - 1 = {0} exceeds the 63-bit factoring bound")]
    ExponentOverflow(u128),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("q = {0} is 3 mod 4: the radical route does not apply, use the quadratic-extension route")]
    QuadExtObstruction(u64),
    #[error("internal assertion failed: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("oracle budget exceeded: {0}")]
    Budget(String),
    #[error("out of method scope: {0}")]
    OutOfScope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
