use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {0:?} appears more than once in the alphabet")]
    DuplicateSymbol(char),
    #[error("an alphabet needs at least 2 distinct symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),
    #[error("message does not end with the sentinel symbol {0:?}")]
    SentinelMissing(char),
    #[error("{n}! is not larger than the value to encode")]
    CapacityExceeded { n: usize },
    #[error("not a permutation of 0..{len}: {reason}")]
    NotAPermutation { len: usize, reason: String },
    #[error("cover item {0:?} appears more than once")]
    DuplicateItem(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("item {0:?} is not part of the baseline list")]
    ItemNotInBaseline(String),
    #[error("cover list has {available} items but the message needs at least {required}")]
    CoverTooSmall { required: usize, available: usize },
    #[error("key has {key} entries but the cover list has {cover}")]
    KeyLengthMismatch { key: usize, cover: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
