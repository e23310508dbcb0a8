use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("exponent {0} outside the supported range [1+1e-6, 1e6]")]
    ExponentOutOfRange(f64),

    #[error("duality mapping is only defined for exponents strictly between 1 and infinity, got {0}")]
    DualityUndefined(String),

    #[error("vector must have at least one entry")]
    EmptyVector,

    #[error("entry {index} is not finite ({value})")]
    NonFiniteEntry { index: usize, value: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operands carry different exponents")]
    MixedExponents,

    #[error("{role} must be nonzero")]
    ZeroVector { role: &'static str },

    #[error("{what} must be nonempty")]
    EmptyList { what: &'static str },

    #[error("shift by {shift} overflows support index {index}")]
    IndexOverflow { index: i64, shift: i64 },

    #[error("group order must be at least 1")]
    EmptyGroup,

    #[error("cayley entry at row {row}, col {col} is {value}, outside 0..{order}")]
    CayleyEntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("cayley table is not a latin square: duplicate in {axis} {index}")]
    NotLatinSquare { axis: &'static str, index: usize },

    #[error("associativity fails at triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("cayley table has no identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },

    #[error("cayley file parse error at line {line}: {message}")]
    CayleyParse { line: usize, message: String },

    #[error("images do not form a homomorphism at pair ({g}, {h})")]
    NotHomomorphism { g: usize, h: usize },

    #[error("permutation image list has {got} entries, group has {expected}")]
    WrongImageCount { got: usize, expected: usize },

    #[error("signed permutation is malformed: {0}")]
    BadSignedPermutation(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("exact norm formulas exist only at p in {{1, 2, inf}}, got {0}")]
    NoExactFormula(String),

    #[error("brute-force search is limited to dimension <= 4, got {0}")]
    DimensionTooLarge(usize),

    #[error("{0} require a finite exponent")]
    FiniteExponentRequired(&'static str),

    #[error("unknown norm estimator '{0}'")]
    UnknownEstimator(String),

    #[error("vector lies outside the required subspace: {0}")]
    SubspaceViolation(&'static str),

    #[error("model expects a fixed part of dimension {expected}, got {got}")]
    FixedDimMismatch { expected: usize, got: usize },

    #[error("{what} must be strictly increasing in absolute value")]
    NotIncreasing { what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
