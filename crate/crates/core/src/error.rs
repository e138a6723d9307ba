use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("base powers differ: {0} vs {1}")]
    BasePowerMismatch(usize, usize),
    #[error("leading coefficient of the divisor is zero")]
    ZeroLeadingCoefficient,
    #[error("quotient would start at a negative power ({numerator} < {denominator})")]
    NegativePower { numerator: usize, denominator: usize },
    #[error("series is not unit-normalized (base power {base}, constant term {constant})")]
    NotUnitNormalized { base: usize, constant: String },
    #[error("non-finite coefficient at power {0}")]
    NonFinite(usize),
    #[error("malformed series: {0}")]
    MalformedSeries(String),
    #[error("denominator parameter beta_{index} = {value} is a non-positive integer")]
    InvalidBeta { index: usize, value: String },
    #[error("lambda = {0} is excluded (negative integer or p + lambda = 0)")]
    InvalidLambda(String),
    #[error("numerator parameter alpha_{index} = {value} makes a Pochhammer factor vanish")]
    ZeroAlphaPochhammer { index: usize, value: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("recurrence coefficient alpha vanishes")]
    ZeroAlpha,
    #[error("vanishing denominator alpha + n - p at n = {0}")]
    VanishingDenominator(usize),
    #[error("operator family {0} has an index-dependent alpha")]
    AlphaNotConstant(String),
    #[error("function vanishes on the sampling grid at z = {0}")]
    ZeroOnGrid(String),
    #[error("constant term {got} differs from the expected {expected}")]
    ConstantTerm { expected: String, got: String },
    #[error("unsupported dominant: {0}")]
    UnsupportedDominant(String),
    #[error("unknown identifier: {0}")]
    UnknownId(String),
}

impl Error {
    /// Errors that come from a numerical precondition (as opposed to a bad
    /// parameter or malformed input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::ZeroLeadingCoefficient
                | Error::NotUnitNormalized { .. }
                | Error::NonFinite(_)
                | Error::ZeroAlpha
                | Error::VanishingDenominator(_)
                | Error::ZeroOnGrid(_)
                | Error::ConstantTerm { .. }
        )
    }
}
