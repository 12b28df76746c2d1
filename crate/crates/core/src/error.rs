use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid part {0}: parts must be positive integers")]
    InvalidPart(String),

    #[error("{sub} is not contained in {whole}")]
    NotContained { whole: String, sub: String },

    #[error("part {part} is not divisible by {divisor}")]
    NotDivisible { part: u64, divisor: u64 },

    #[error("partition {0} has no odd part")]
    NoOddPart(String),

    #[error("the 2-adic valuation of 0 is undefined")]
    ZeroValuation,

    #[error("{what} is undefined at n = {n} (domain starts at {min})")]
    OutOfDomain { what: String, n: u64, min: u64 },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{item} is not a member of {domain}")]
    NotInFamily { item: String, domain: String },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("n = {n} exceeds the oracle bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },

    #[error("{0}")]
    WrongKind(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
