use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("profile {profile} is not a partition of {d}")]
    ProfileNotOfDegree { profile: String, d: u32 },
    #[error("degree {d} exceeds oracle cap {cap}")]
    OracleCapExceeded { d: u32, cap: u32 },
    #[error("coefficient {exps:?} lies beyond the series caps {caps:?}")]
    SeriesCapExceeded { exps: Vec<u32>, caps: Vec<u32> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl HurwitzError {
    /// Validation errors are the caller's fault; everything else is ours.
    pub fn is_validation(&self) -> bool {
        !matches!(self, HurwitzError::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, HurwitzError>;
