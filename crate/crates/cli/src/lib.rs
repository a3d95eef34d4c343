//! File format, subcommands and corpus runner behind the `homalg` binary.

pub mod campaign;
pub mod commands;
pub mod file;

use serde::Serialize;

pub use file::{Definition, Document, FileError};

/// Default of `HOMALG_MAX_DIM`.
pub const DEFAULT_MAX_DIM: usize = 32;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Core(#[from] homalg_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a failed internal consistency check, 2 for everything the caller got wrong.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(homalg_core::Error::InternalCheckFailure(_)) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Pretty JSON with object keys in sorted order.
///
/// Going through `serde_json::Value` sorts keys, since its map is a `BTreeMap` unless the
/// `preserve_order` feature is enabled.
pub fn sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}

/// `HOMALG_MAX_DIM`, or the default when unset.
pub fn max_dim() -> Result<usize> {
    match std::env::var("HOMALG_MAX_DIM") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("HOMALG_MAX_DIM must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

pub fn check_dim(dim: usize) -> Result<()> {
    let max = max_dim()?;
    if dim > max {
        return Err(CliError::Usage(format!(
            "dimension {dim} exceeds HOMALG_MAX_DIM = {max}; raise it to proceed"
        )));
    }
    Ok(())
}
