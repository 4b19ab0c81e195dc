use thiserror::Error;

#[derive(Debug, Error)]
pub enum CubeError {
    #[error("dimension {n} out of range [{min}, {max}]")]
    Dimension { n: u32, min: u32, max: u32 },

    #[error("vertex {vertex} is not a vertex of Q_{n}")]
    VertexOutOfRange { vertex: u64, n: u32 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("explicit set for Q_{n} exceeds the cap n_max = {n_max}; use formula mode")]
    TooLarge { n: u32, n_max: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Integrity(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CubeError {
    /// True for errors caused by bad user-supplied parameters rather than
    /// failed builds or checks.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            CubeError::Dimension { .. }
                | CubeError::VertexOutOfRange { .. }
                | CubeError::Parameter(_)
                | CubeError::TooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, CubeError>;
