// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: kaschlab::Error,
    },
    #[error(transparent)]
    Core(#[from] kaschlab::Error),
    #[error("unknown builder `{0}`")]
    UnknownBuilder(String),
    #[error("{0}")]
    Usage(String),
    #[error("report does not match the schema: {0}")]
    Schema(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn in_file(path: &Path, source: kaschlab::Error) -> Self {
        CliError::File { path: path.display().to_string(), source }
    }

    /// 2 for bad input, 3 for internal inconsistency, 4 for unsupported fields.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::UnknownBuilder(_) | CliError::Usage(_) => 2,
            CliError::File { source, .. } | CliError::Core(source) => core_exit_code(source),
            CliError::Schema(_) => 3,
            CliError::Json(_) => 1,
        }
    }
}

fn core_exit_code(e: &kaschlab::Error) -> i32 {
    use kaschlab::Error as E;
    if e.is_unsupported() {
        return 4;
    }
    match e {
        E::RouteDisagreement(_) | E::InvariantViolation(_) => 3,
        E::Parse(_)
        | E::DuplicateBasisLabel(_)
        | E::UnknownSymbol(_)
        | E::RelationNotParallel(_)
        | E::IdealClosureOverflow(_)
        | E::NotUnital
        | E::InvalidAlgebra(_)
        | E::InvalidAction(_)
        | E::UnknownZoo(_)
        | E::DimensionMismatch(_) => 2,
        _ => 1,
    }
}
