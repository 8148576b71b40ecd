use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact polynomial division left a remainder. Indicates an arithmetic bug.
    #[error("inexact division: remainder {remainder} when dividing {dividend} by {divisor}")]
    InexactDivision {
        dividend: String,
        divisor: String,
        remainder: String,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("q-degree {max_exp} exceeds reversal degree {degree}{}", context.as_deref().map(|c| format!(" at {c}")).unwrap_or_default())]
    DegreeOverflow {
        max_exp: i64,
        degree: i64,
        context: Option<String>,
    },

    #[error("negative q-exponent {min_exp} cannot be reversed{}", context.as_deref().map(|c| format!(" at {c}")).unwrap_or_default())]
    NegativeExponent {
        min_exp: i64,
        context: Option<String>,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("word content is not a partition: {0:?}")]
    NonPartitionContent(Vec<usize>),

    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("malformed permutation: {0:?}")]
    MalformedPermutation(Vec<usize>),

    #[error("malformed ordered set partition: {0}")]
    MalformedSetPartition(String),

    #[error("out of range: {0}")]
    Range(String),

    #[error("expected a Schur-positive polynomial result, found {coeff} on {partition}")]
    Negativity { partition: String, coeff: String },

    #[error("vanishing denominator: (q^{base}; q)_{index} = 0")]
    VanishingDenominator { base: i64, index: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
