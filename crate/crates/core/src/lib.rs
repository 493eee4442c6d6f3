// SPDX-License-Identifier: Apache-2.0

//! Exact computations with finite-dimensional algebras over `GF(p)` and `QQ`:
//! radicals, primitive idempotents, simple, projective and injective modules,
//! and decision procedures for Kasch-type ring properties.
//!
//! ```
//! use kaschlab::{props, zoo, Rationals, Side};
//!
//! let t2 = zoo::zoo("T2", &Rationals).unwrap();
//! assert!(!props::is_kasch(&t2, Side::Right).unwrap());
//! ```

pub mod algebra;
pub mod any;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod field;
pub mod homological;
pub mod linalg;
pub mod module;
pub mod props;
pub mod theorems;
pub mod wedderburn;
pub mod zoo;

pub use any::AnyAlgebra;
pub use algebra::{Algebra, Bimodule, GroupAction, GroupTable};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::{EchelonBasis, Matrix};
pub use module::{ModuleRep, Side};
pub use props::{analyze, PropertyReport};
pub use wedderburn::Structure;

/// Algebra over the rationals.
pub type QqAlgebra = Algebra<Rationals>;
/// Algebra over a prime field.
pub type GfAlgebra = Algebra<PrimeField>;
/// Matrix over the rationals.
pub type QqMatrix = Matrix<Rationals>;
/// Matrix over a prime field.
pub type GfMatrix = Matrix<PrimeField>;
/// Module over a rational algebra.
pub type QqModule = ModuleRep<Rationals>;
/// Module over a prime-field algebra.
pub type GfModule = ModuleRep<PrimeField>;
