use thiserror::Error;

/// Errors raised by the algebra layers.
///
/// Every variant carries a short stable code (see [`Error::code`]) so that
/// front ends can emit machine-parsable diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("non-finite component in complex scalar")]
    NonFinite,
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("element kind mismatch: {0}")]
    KindMismatch(String),
    #[error("infinite decomposition: every integer splits as z = x + (z - x)")]
    InfiniteDecomposition,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("not invertible: constant term is 0")]
    ZeroConstantTerm,
    #[error("cannot certify nonzero: all coefficients vanish up to probe {probe}; increase probe")]
    UncertifiedNonzero { probe: u64 },
    #[error("classification unsupported: {0}")]
    ClassificationUnsupported(String),
    #[error("norm {norm} is not < 1; Neumann series does not converge")]
    NormTooLarge { norm: f64 },
    #[error("iteration budget exhausted; achieved residual {residual}")]
    IterationBudget { residual: f64 },
    #[error("support size exceeds configured cap ({cap} entries)")]
    SupportCap { cap: usize },
    #[error("argument outside domain: {0}")]
    OutsideDomain(String),
    #[error("parse error{}: {msg}", line.map(|n| format!(" at line {n}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse { line: None, msg: msg.into() }
    }

    pub fn parse_at(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line: Some(line), msg: msg.into() }
    }

    /// Stable short code, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero-denominator",
            Error::NotInvertible(_) => "not-invertible",
            Error::NonPrimeModulus(_) => "nonprime-modulus",
            Error::NonFinite => "nonfinite",
            Error::ContextMismatch(_) => "context-mismatch",
            Error::KindMismatch(_) => "kind-mismatch",
            Error::InfiniteDecomposition => "infinite-decomposition",
            Error::ArityMismatch { .. } => "arity-mismatch",
            Error::ZeroConstantTerm => "zero-constant-term",
            Error::UncertifiedNonzero { .. } => "uncertified-nonzero",
            Error::ClassificationUnsupported(_) => "classification-unsupported",
            Error::NormTooLarge { .. } => "norm-too-large",
            Error::IterationBudget { .. } => "iteration-budget",
            Error::SupportCap { .. } => "support-cap",
            Error::OutsideDomain(_) => "outside-domain",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
