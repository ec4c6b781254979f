use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("relations force a cycle through `{0}`")]
    Cycle(String),

    #[error("{elements} elements exceeds the ideal-enumeration cap of {cap}")]
    SizeCapExceeded { elements: usize, cap: usize },

    #[error("path search visited more than {cap} states")]
    SearchCapExceeded { cap: u64 },

    #[error("Frobenius oracle cap exceeded: {0}")]
    OracleCapExceeded(String),

    #[error("subset {0} is not a poset ideal")]
    NotDownClosed(String),

    #[error("not a path: {0}")]
    InvalidPath(String),

    #[error("path violates condition (*): {0}")]
    StarViolation(String),

    #[error("level labeling is not a feasible sigma function: {0}")]
    InfeasibleLabeling(String),

    #[error("unknown sample poset `{0}`")]
    UnknownTag(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("constructed poset has invariants {found:?}, expected {expected:?}; poset: {poset}")]
    ConstructionMismatch {
        expected: (i64, i64, i64),
        found: (i64, i64, i64),
        poset: String,
    },

    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("{location}: {source}")]
    Located {
        location: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for errors caused by a configured resource cap rather than bad input.
    pub fn is_cap_exhaustion(&self) -> bool {
        match self {
            Error::SizeCapExceeded { .. }
            | Error::SearchCapExceeded { .. }
            | Error::OracleCapExceeded(_) => true,
            Error::Located { source, .. } => source.is_cap_exhaustion(),
            _ => false,
        }
    }

    pub(crate) fn at(self, location: impl Into<String>) -> Error {
        Error::Located {
            location: location.into(),
            source: Box::new(self),
        }
    }
}
