// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::dsl::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("construction has no unit element")]
    NonUnitalResult,
    #[error("unknown zoo algebra `{0}`")]
    UnknownZoo(String),

    #[error("characteristic {characteristic} is not supported for an algebra of dimension {dim}")]
    UnsupportedCharacteristic { characteristic: u64, dim: usize },
    #[error("radical verification failed: {0}")]
    RadicalVerificationFailed(String),
    #[error("could not split an idempotent over the ground field: {0}")]
    SplittingFailed(String),

    #[error("module side mismatch")]
    SideMismatch,
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("not a submodule: {0}")]
    NotASubmodule(String),
    #[error("module is not semisimple")]
    NotSemisimple,
    #[error("semisimple decomposition does not account for the whole module: {0}")]
    IncompleteDecomposition(String),
    #[error("injective extension system is inconsistent: {0}")]
    ExtensionSystemInconsistent(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("decision routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("algebra is not self-injective")]
    NotSelfInjective,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("duplicate basis label `{0}`")]
    DuplicateBasisLabel(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("relation combines non-parallel paths: {0}")]
    RelationNotParallel(String),
    #[error("path enumeration exceeds the budget of {0} paths")]
    IdealClosureOverflow(usize),
    #[error("presentation has no unit")]
    NotUnital,
}

impl Error {
    /// Whether the error reports a field or characteristic the engine cannot handle.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedCharacteristic { .. }
                | Error::UnsupportedField(_)
                | Error::SplittingFailed(_)
                | Error::RadicalVerificationFailed(_)
                | Error::InvalidField(_)
        )
    }
}
