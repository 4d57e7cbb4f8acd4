// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is even; only odd characteristic is supported")]
    EvenCharacteristic(u64),

    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },

    #[error("squareness of zero is undefined")]
    ZeroElement,

    #[error("a line needs two distinct points")]
    EqualPoints,

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("graph is not strongly regular: {0}")]
    NotStronglyRegular(String),

    #[error("affine map multiplier must be nonzero")]
    ZeroMultiplier,

    #[error("operation requires q ≡ {expected} (mod 4), got q = {q}")]
    WrongResidueClass { q: u64, expected: u64 },

    #[error("{0} is not an eigenvalue of the graph")]
    NotAnEigenvalue(i64),

    #[error("eigenfunction must have at least one nonzero value")]
    ZeroFunction,

    #[error("function has {got} values, graph has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },

    #[error("check `{check}` failed: {witness}")]
    CheckFailed { check: String, witness: String },

    #[error("integer overflow in exact elimination")]
    Overflow,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn check(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::CheckFailed {
            check: check.into(),
            witness: witness.into(),
        }
    }
}
