use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bit width {0} is outside the supported range 2..=16")]
    UnsupportedWidth(u32),

    #[error("table length {0} is not a power of two 2^n with 2 <= n <= 16")]
    BadTableLength(usize),

    #[error("entry {value} at index {index} does not fit in {n} bits")]
    EntryOutOfRange { index: usize, value: u64, n: u32 },

    #[error("s-box is not bijective")]
    NotBijective,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("matrix has {rows} rows, expected 2^{cols} = {}", 1usize << cols)]
    DimensionMismatch { rows: usize, cols: usize },

    #[error("value {value} does not fit in {n} bits")]
    ValueOutOfRange { value: u64, n: u32 },

    #[error("factoradic index {index} is out of range for n = {n} (n! = {limit})")]
    IndexOutOfRange { n: usize, index: u64, limit: u64 },

    #[error("invalid hex key: {0}")]
    InvalidHex(String),

    #[error("key material is empty")]
    EmptyKey,

    #[error("max_attempts must be at least 1")]
    ZeroAttempts,

    #[error("every clone in {attempts} attempts contains fixed or reverse fixed points")]
    RemovalExhausted { attempts: u128 },

    #[error("every clone keeps a fixed or reverse fixed point at index {index}: the seed maps it to 0 or 2^n - 1")]
    FixedPointUnavoidable { index: u32 },

    #[error("nonlinearity bound is defined for n >= 3, got n = {0}")]
    BoundUndefined(u32),

    #[error("exhaustive enumeration is limited to n <= 4, got n = {0}")]
    EnumerationTooLarge(u32),

    #[error("mask {mask} is not a nonzero {n}-bit combination")]
    InvalidMask { mask: u32, n: u32 },
}
