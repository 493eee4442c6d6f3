// SPDX-License-Identifier: Apache-2.0

//! An algebra whose field is only known at run time.

use crate::algebra::{Algebra, Bimodule, GroupAction, GroupTable};
use crate::dsl::{self, AlgebraDocument};
use crate::error::Result;
use crate::field::{FieldSpec, PrimeField, Rationals};
use crate::props::{analyze, PropertyReport};
use crate::theorems::{check_report, InvariantCheck};
use crate::zoo;

#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Rational(Algebra<Rationals>),
    Prime(Algebra<PrimeField>),
}

macro_rules! each {
    ($self:expr, $a:ident => $body:expr) => {
        match $self {
            AnyAlgebra::Rational($a) => $body,
            AnyAlgebra::Prime($a) => $body,
        }
    };
}

macro_rules! map {
    ($self:expr, $a:ident => $body:expr) => {
        match $self {
            AnyAlgebra::Rational($a) => AnyAlgebra::Rational($body),
            AnyAlgebra::Prime($a) => AnyAlgebra::Prime($body),
        }
    };
}

macro_rules! build {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec.validated()? {
            FieldSpec::Rationals => {
                let $f = &Rationals;
                AnyAlgebra::Rational($body)
            }
            FieldSpec::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                AnyAlgebra::Prime($body)
            }
        }
    };
}

impl AnyAlgebra {
    /// Builds a parsed document over its declared field or over `field`.
    pub fn from_document(doc: &AlgebraDocument, field: Option<FieldSpec>) -> Result<Self> {
        let spec = field.unwrap_or_else(|| doc.field());
        Ok(build!(spec, f => doc.build(f)?))
    }

    /// Parses `.alg` text.
    pub fn parse(text: &str, field: Option<FieldSpec>) -> Result<Self> {
        Self::from_document(&dsl::parse(text)?, field)
    }

    pub fn zoo(name: &str, field: FieldSpec) -> Result<Self> {
        Ok(build!(field, f => zoo::zoo(name, f)?))
    }

    pub fn triangular(n: usize, field: FieldSpec) -> Result<Self> {
        Ok(build!(field, f => Algebra::triangular_algebra(f, n)?))
    }

    pub fn matrix(n: usize, field: FieldSpec) -> Result<Self> {
        Ok(build!(field, f => Algebra::matrix_algebra(f, n)?))
    }

    pub fn truncated(n: usize, field: FieldSpec) -> Result<Self> {
        Ok(build!(field, f => Algebra::truncated_poly(f, n)?))
    }

    pub fn cyclic_group_algebra(n: usize, field: FieldSpec) -> Result<Self> {
        Ok(build!(field, f => Algebra::group_algebra(f, &GroupTable::cyclic(n))?))
    }

    pub fn name(&self) -> &str {
        each!(self, a => a.name())
    }

    pub fn dim(&self) -> usize {
        each!(self, a => a.dim())
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Rational(_) => FieldSpec::Rationals,
            AnyAlgebra::Prime(a) => FieldSpec::Prime(a.field().modulus()),
        }
    }

    pub fn is_commutative(&self) -> bool {
        each!(self, a => a.is_commutative())
    }

    pub fn serialize(&self) -> String {
        each!(self, a => dsl::serialize(a))
    }

    pub fn analyze(&self) -> Result<PropertyReport> {
        each!(self, a => analyze(a))
    }

    pub fn check_report(&self, report: &PropertyReport) -> Result<Vec<InvariantCheck>> {
        each!(self, a => check_report(a, report))
    }

    pub fn renamed(&self, name: &str) -> Self {
        map!(self, a => a.renamed(name))
    }

    pub fn opposite(&self) -> Result<Self> {
        Ok(map!(self, a => a.opposite()?))
    }

    pub fn amplify(&self, n: usize) -> Result<Self> {
        Ok(map!(self, a => a.matrix_amplification(n)?))
    }

    /// Skew group algebra for the swap of the two factors of `B x B`.
    pub fn skew_swap(&self) -> Result<Self> {
        Ok(map!(self, a => a.skew_group_algebra(&GroupAction::swap(a)?)?))
    }

    /// Fixed ring of the swap of the two factors of `B x B`.
    pub fn fixed_swap(&self) -> Result<Self> {
        Ok(map!(self, a => a.fixed_ring(&GroupAction::swap(a)?)?))
    }

    /// Trivial extension by the dual bimodule.
    pub fn trivial_extension(&self) -> Result<Self> {
        Ok(map!(self, a => a.trivial_extension(&Bimodule::dual(a)?)?))
    }

    /// `self x other`; both must live over the same field.
    pub fn product(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AnyAlgebra::Rational(a), AnyAlgebra::Rational(b)) => Ok(AnyAlgebra::Rational(a.product(b)?)),
            (AnyAlgebra::Prime(a), AnyAlgebra::Prime(b)) if a.field() == b.field() => {
                Ok(AnyAlgebra::Prime(a.product(b)?))
            }
            _ => Err(crate::Error::InvalidField(format!(
                "cannot multiply algebras over {} and {}",
                self.field_spec(),
                other.field_spec()
            ))),
        }
    }
}
