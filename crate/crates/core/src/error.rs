use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coefficient of x^{0} is zero; the sign pattern is undefined")]
    ZeroCoefficient(usize),
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("the zero polynomial has no sign pattern or root count")]
    ZeroPolynomial,
    #[error("expected a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("derivative of order {0} has a multiple root")]
    MultipleRoot(usize),
    #[error("derivative of order {0} vanishes at 0")]
    ZeroRoot(usize),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("invalid sign pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid SAP: {0}")]
    InvalidSap(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("parameter a = {0} is a sign-pattern breakpoint of the family")]
    BreakpointValue(String),
    #[error("parameter must be positive, got {0}")]
    NonPositiveParameter(String),
    #[error("no ladder value verified the construction {0}")]
    LadderExhausted(String),
    #[error("could not instantiate parametric construction {0}")]
    InstantiationFailure(String),
    #[error("degree {0} is outside the classified range 1..=5")]
    OutOfRange(usize),
    #[error("{} couples are unresolved: {}", .0.len(), .0.join("; "))]
    UnresolvedRows(Vec<String>),
    #[error("certificate for {couple} failed verification")]
    CertificateRejected { couple: String },
    #[error("certificate database: {0}")]
    Database(String),
}
