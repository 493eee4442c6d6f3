// SPDX-License-Identifier: Apache-2.0

//! Library side of the `kaschlab` command-line tool.

pub mod construct;
pub mod error;
pub mod goldens;
pub mod report;

pub use error::CliError;

use std::path::Path;

use kaschlab::{AnyAlgebra, FieldSpec};

/// Reads and builds an `.alg` file, optionally over another field.
pub fn load(path: &Path, field: Option<FieldSpec>) -> Result<AnyAlgebra, CliError> {
    let text = read(path)?;
    AnyAlgebra::parse(&text, field).map_err(|e| CliError::in_file(path, e))
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
