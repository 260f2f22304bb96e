//! Crate-wide error type.

/// Errors reported by matrix, poset, covering and classification operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("matrix must have size at least 1")]
    EmptyMatrix,

    #[error("not a quasi-metric: {detail}")]
    NotQuasiMetric { detail: String },

    #[error("integer overflow while combining matrix entries")]
    Overflow,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("vector has length {got}, expected {expected}")]
    BadVectorLength { got: usize, expected: usize },

    #[error("not a permutation of 0..{n}: {detail}")]
    BadPermutation { n: usize, detail: String },

    #[error("matrix is not basic: d({i},{j}) + d({j},{i}) = 0 (1-based indices)")]
    NotBasic { i: usize, j: usize },

    #[error("matrix is not N-graded: d({i},{j}) = {value} < 0 (1-based indices)")]
    NotNGraded { i: usize, j: usize, value: i64 },

    #[error("matrix is not Gorenstein: no Nakayama bijection exists")]
    NotGorenstein,

    #[error("truncation shift must be at least 1, got {0}")]
    BadTruncationShift(i64),

    #[error("shifted matrix is not N-graded, conjugacy surgery does not apply")]
    SurgeryNotGraded,

    #[error("relations contain a cycle through {a} and {b}")]
    RelationCycle { a: String, b: String },

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("poset has {size} elements, which exceeds the homology bound {bound}")]
    HomologyBound { size: usize, bound: usize },

    #[error("covering degree must be at least 1, got {0}")]
    BadCoverDegree(i64),

    #[error("semigroup generators must be positive, got {0}")]
    BadGenerator(i64),

    #[error("semigroup generators must have gcd 1, got gcd {0}")]
    BadGcd(i64),

    #[error("covering degree {degree} must exceed the Frobenius number {frobenius}")]
    CoverDegreeTooSmall { degree: i64, frobenius: i64 },

    #[error("poset is nonempty but has no maximum; only the empty poset and posets with a maximum can be realized")]
    NoMaximum,

    #[error("quiver is not a tree with a unique sink: {detail}")]
    NotSinkTree { detail: String },

    #[error("cyclic parameters must be non-negative and not all zero")]
    BadCyclicParams,

    #[error("family {family} does not admit parameter {size}; admissible sizes: {admissible}")]
    BadFamilySize {
        family: &'static str,
        size: usize,
        admissible: &'static str,
    },

    #[error("family NONE cannot be instantiated")]
    NoneFamily,

    #[error("target {target} requires size {required}, got {got}")]
    BadTargetSize {
        target: &'static str,
        required: usize,
        got: usize,
    },

    #[error("enumeration over {candidates} raw candidates exceeds the supported budget of {budget}; lower the size or entry bound")]
    EnumerationTooLarge { candidates: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
