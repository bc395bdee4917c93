use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LfcsError {
    #[error("symbol id {id} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfAlphabet { id: u16, alphabet_size: usize },

    #[error("alphabet size must be in 1..=65536, got {0}")]
    InvalidAlphabetSize(usize),

    #[error("deleted positions must be strictly increasing (offending index {0})")]
    UnsortedDeletion(usize),

    #[error("deleted position {index} is out of range for a string of length {len}")]
    DeletionOutOfRange { index: usize, len: usize },

    #[error("symbol {symbol} deleted {deleted} times but the multiset holds only {available}")]
    CapacityExceeded {
        symbol: u16,
        deleted: usize,
        available: usize,
    },

    #[error("search space of {size} candidates exceeds the limit of {limit}")]
    SpaceLimitExceeded { size: BigUint, limit: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed instance text at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, LfcsError>;
