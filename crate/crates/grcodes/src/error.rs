//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by field/group construction, parsing, and code derivation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    #[error("field size {q} is not a prime power")]
    NotPrimePower { q: u64 },

    #[error("field size {q} exceeds the supported bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },

    #[error("modulus {modulus} is not a monic degree-{k} polynomial with coefficients below {p}")]
    BadModulus { modulus: String, p: u64, k: u32 },

    #[error("modulus {modulus} is reducible over GF({p})")]
    ReducibleModulus { modulus: String, p: u64 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("group order {order} exceeds the supported bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },

    #[error("invalid group specification: {reason}")]
    InvalidGroup { reason: String },

    #[error("listing {listing} is not valid for group {group}")]
    InvalidListing { listing: String, group: String },

    #[error("operands belong to different group rings")]
    GroupMismatch,

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("matrix shape error: {reason}")]
    Shape { reason: String },

    #[error("symplectic forms need an even length, got {n}")]
    OddSymplecticLength { n: usize },

    #[error("enumeration of {required} codewords exceeds the budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("cannot take the minimum weight of a code with no nonzero codewords")]
    EmptyEnumeration,

    #[error("self-orthogonality certificate ({kind}) does not hold: {residual}")]
    CertificateFailed { kind: String, residual: String },

    #[error("hermitian constructions need a degree-2 extension field, got GF({p}^{k})")]
    NotQuadraticExtension { p: u64, k: u32 },

    #[error("polynomial precondition violated: {reason}")]
    PolynomialDomain { reason: String },

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
