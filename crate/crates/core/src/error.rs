use thiserror::Error;

/// Errors produced by the partition constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition text: {0}")]
    Parse(String),

    #[error("parts must be positive integers (got {0})")]
    NonPositivePart(u64),

    #[error("parameter {name} must be at least {min} (got {value})")]
    ParameterTooSmall {
        name: &'static str,
        min: u64,
        value: u64,
    },

    #[error("partition {partition} is not {k}-regular: part {part} is divisible by {k}")]
    NotRegular { partition: String, k: u64, part: u64 },

    #[error("partition {partition} has part {part} with multiplicity {mult} >= {bound}")]
    MultiplicityTooLarge {
        partition: String,
        part: u64,
        mult: u64,
        bound: u64,
    },

    #[error("digit {digit} at position {position} is out of range for radix {radix}")]
    DigitOutOfRange {
        position: usize,
        digit: u64,
        radix: u64,
    },

    #[error("expected {expected} digits, got {got}")]
    DigitCount { expected: usize, got: usize },

    #[error("value {value} is out of range for a factor list with product {product}")]
    ValueOutOfRange { value: u64, product: u64 },

    #[error("{value} is divisible by {divisor}")]
    Divisible { value: u64, divisor: u64 },

    #[error("factor list has total product 1; no integer can be classified")]
    TrivialProduct,

    #[error("factor index {index} out of range for {len} factors")]
    FactorIndex { index: usize, len: usize },

    #[error("factor must be positive (got 0)")]
    ZeroFactor,

    #[error("factor product {product} does not match the target {target}")]
    ProductMismatch { product: u64, target: u64 },

    #[error("factors {k_factor} and {l_factor} are neither equal nor coprime")]
    IncompatibleFactors { k_factor: u64, l_factor: u64 },

    #[error("gcd({k}, {l}) = {gcd} but this map needs coprime parameters")]
    NotCoprime { k: u64, l: u64, gcd: u64 },

    #[error("grid entry ({row}, {col}) is not {row_factor},{col_factor}-regular")]
    GridEntry {
        row: usize,
        col: usize,
        row_factor: u64,
        col_factor: u64,
    },

    #[error("grid shape {got_rows}x{got_cols} does not match factor lists {rows}x{cols}")]
    GridShape {
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series constant term is not invertible")]
    NotInvertible,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
