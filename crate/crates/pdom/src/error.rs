use std::io;

use pdom_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },

    #[error(transparent)]
    Write(#[from] io::Error),

    #[error("{0}")]
    Usage(String),
}

impl AppError {
    /// 3 for a resource cap, 2 for any other input problem.
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Core(CoreError::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}
