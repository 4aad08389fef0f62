//! Command-line front end and file formats for `pdom-core`.

pub mod cli;
pub mod dot;
pub mod edgelist;
pub mod genspec;
pub mod records;
pub mod scan;

mod error;

pub use error::AppError;
