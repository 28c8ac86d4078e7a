use thiserror::Error;

use crate::weyl::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("e must be at least 2, got {0}")]
    InvalidE(u32),

    #[error("invalid weight set: {0}")]
    InvalidWeights(String),

    #[error("multipartition has {found} components but the weight set has {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("component index {index} out of range for {d} components")]
    ComponentOutOfRange { index: usize, d: usize },

    #[error("invalid Weyl type {family}{n}: {reason}")]
    InvalidWeylType {
        family: Family,
        n: usize,
        reason: &'static str,
    },

    #[error(
        "{p} is a bad prime for type {family}; the characteristic-0 description does not apply"
    )]
    BadCharacteristic { family: Family, p: u64 },

    #[error("characteristic must be 0 or a prime, got {0}")]
    NotPrime(u64),

    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),

    #[error("group of order {order} exceeds the limit {max_order}")]
    GroupTooLarge { order: u128, max_order: usize },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
