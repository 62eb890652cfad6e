use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0}")]
    Domain(String),
    #[error("zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("zero denominator in the two-root multiplicity formula")]
    DegenerateTwoRoot,
    /// Even multipliers on the odd-exponent obstruction path are covered by
    /// the earlier even-multiplier finiteness result, not by this argument.
    #[error("multiplier {0} is even; this obstruction only applies to odd multipliers")]
    EvenMultiplierDelegated(u32),
    /// An identity that must hold for every valid input failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
