use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at the given point")]
    PoleAtPoint,
    #[error("rational function has a factor coprime to every basis element")]
    NotFactorable,
    #[error("zero polynomial is not a valid input here")]
    ZeroInput,
    #[error("value too large to factor over machine integers")]
    FactorOverflow,
}
