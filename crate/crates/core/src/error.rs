use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("endpoint root; perturb or deflate (polynomial vanishes at {0})")]
    EndpointRoot(String),
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("family is minimal for all parameters")]
    MinimalForAllParameters,
    #[error("invalid surd radicand {0}: must be a square-free integer >= 2")]
    InvalidRadicand(i64),
    #[error("{family}: {source}")]
    InFamily {
        family: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps an error with the name of the family being processed.
    pub fn in_family(self, family: impl Into<String>) -> Self {
        Error::InFamily {
            family: family.into(),
            source: Box::new(self),
        }
    }

    /// The innermost error, with family context removed.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::InFamily { source, .. } => source.root_cause(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
