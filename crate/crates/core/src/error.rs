use thiserror::Error;

/// Errors produced by the tower, group, and character layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be an odd prime, got p = {0}")]
    EvenCharacteristic(u64),

    #[error("q = {0} is not a power of an odd prime")]
    InvalidOrder(u64),

    #[error("polynomial {0} is reducible")]
    ReduciblePolynomial(String),

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("zeta_u is undefined for u = 0")]
    ZeroTwist,

    #[error("transversal of a*F_q requires a != 0")]
    ZeroModulus,

    #[error("{what}: size {size} exceeds cap {cap}")]
    TooLarge { what: &'static str, size: u64, cap: u64 },

    #[error("class {0} is not in the canonical census")]
    UnknownClass(String),

    #[error("element {element} is not in subgroup {subgroup}")]
    NotInSubgroup { subgroup: &'static str, element: String },

    #[error("cyclotomic integer overflow")]
    IntegerOverflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
