use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invariant e must be non-negative for a ruled surface over P^1, got {0}")]
    NegativeInvariant(BigInt),

    #[error("pushforward needs a non-negative section coefficient, got a = {0}")]
    NegativeSectionCoefficient(BigInt),

    #[error("{what} = {value} is too large to enumerate")]
    TooLarge { what: &'static str, value: BigInt },

    #[error("c = {c} lies outside the stability window c > max(-e/4, 0) for e = {e}")]
    Unstable { e: BigInt, c: BigInt },

    #[error("Σ·C = {sigma_dot_c} is odd, so c1·C is not divisible by the rank")]
    Parity { sigma_dot_c: BigInt },

    #[error("truncation degrees differ: n = {left} vs n = {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientLength { expected: usize, got: usize },

    #[error("family has no summands")]
    EmptyFamily,

    #[error("virtual rank of the pushforward is {0}, the twist degree does not make χ vanish")]
    NonzeroVirtualRank(BigRational),

    #[error("{what} = {value} is not an integer")]
    NonIntegral {
        what: &'static str,
        value: BigRational,
    },

    #[error("oracle disagreement on {what}: closed form {closed}, independent route {oracle}")]
    OracleDisagreement {
        what: &'static str,
        closed: BigInt,
        oracle: BigInt,
    },
}

impl Error {
    /// Short machine-readable code, used as the `reason` field of CLI output.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::Parity { .. } => "parity",
            Error::Unstable { .. } => "stability",
            Error::NegativeInvariant(_) => "invariant",
            Error::NegativeSectionCoefficient(_) => "section-coefficient",
            Error::TooLarge { .. } => "too-large",
            Error::TruncationMismatch { .. } | Error::CoefficientLength { .. } => "truncation",
            Error::EmptyFamily => "empty-family",
            Error::NonzeroVirtualRank(_) => "virtual-rank",
            Error::NonIntegral { .. } => "non-integral",
            Error::OracleDisagreement { .. } => "oracle-disagreement",
        }
    }

    /// True for errors caused by the caller's input rather than a broken invariant.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parity { .. }
                | Error::Unstable { .. }
                | Error::NegativeInvariant(_)
                | Error::NegativeSectionCoefficient(_)
                | Error::TooLarge { .. }
        )
    }
}
