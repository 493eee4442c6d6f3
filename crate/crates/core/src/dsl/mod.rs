// SPDX-License-Identifier: Apache-2.0

//! The `.alg` text format: structure constants or a quiver with relations.
//!
//! ```text
//! algebra T2 over QQ {
//!   basis E11, E12, E22;
//!   unit = E11 + E22;
//!   mult E11*E11 = E11;
//!   mult E11*E12 = E12;
//!   mult E12*E22 = E12;
//!   mult E22*E22 = E22;
//! }
//!
//! quiver T2q over GF(101) {
//!   vertices 1, 2;
//!   arrow a: 1 -> 2;
//!   nilpotency 2;
//! }
//! ```
//!
//! Unlisted products are zero. In a quiver, `a*b` is the path "a then b".
//! The full grammar is in `docs/format.md`.

mod flatten;
mod lexer;
mod parser;
mod serialize;

use std::fmt;

use num_rational::BigRational;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::{Field, FieldSpec};

pub use flatten::{flatten, PATH_BUDGET};
pub use lexer::is_identifier;
pub use parser::parse;
pub use serialize::serialize;

/// Byte range plus 1-based line and column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    /// What the parser would have accepted at `span`.
    pub expected: Vec<String>,
}

impl ParseError {
    pub(crate) fn new(span: SourceSpan, message: impl Into<String>, expected: Vec<String>) -> Self {
        ParseError { span, message: message.into(), expected }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.span.line, self.span.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// A linear combination of symbols with rational coefficients.
pub type LinearExpr = Vec<(BigRational, String)>;

/// Structure-constant form.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureDoc {
    pub name: String,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub unit: Option<LinearExpr>,
    /// `(left factor, right factor, product)`.
    pub products: Vec<(String, String, LinearExpr)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A path: a vertex (length 0) or a non-empty composable arrow sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

/// Quiver with relations and a nilpotency bound.
#[derive(Debug, Clone, PartialEq)]
pub struct QuiverPresentation {
    pub name: String,
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    /// Each relation is a combination of paths that must vanish.
    pub relations: Vec<Vec<(BigRational, Path)>>,
    /// Paths of this length or longer are zero.
    pub nilpotency: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraDocument {
    Structure(StructureDoc),
    Quiver(QuiverPresentation),
}

impl AlgebraDocument {
    pub fn name(&self) -> &str {
        match self {
            AlgebraDocument::Structure(s) => &s.name,
            AlgebraDocument::Quiver(q) => &q.name,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            AlgebraDocument::Structure(s) => s.field,
            AlgebraDocument::Quiver(q) => q.field,
        }
    }

    /// Builds the algebra over `field`, which may differ from the declared one.
    pub fn build<F: Field>(&self, field: &F) -> Result<Algebra<F>> {
        match self {
            AlgebraDocument::Structure(s) => s.build(field),
            AlgebraDocument::Quiver(q) => flatten(q, field),
        }
    }
}

impl StructureDoc {
    pub fn build<F: Field>(&self, field: &F) -> Result<Algebra<F>> {
        let d = self.basis.len();
        let index = |s: &str| self.basis.iter().position(|b| b == s).expect("checked by the parser");
        let to_vec = |e: &LinearExpr| -> Result<Vec<F::Elem>> {
            let mut v = vec![field.zero(); d];
            for (c, s) in e {
                let i = index(s);
                v[i] = field.add(&v[i], &field.from_rational(c)?);
            }
            Ok(v)
        };
        let mut consts = vec![field.zero(); d * d * d];
        for (a, b, e) in &self.products {
            let off = (index(a) * d + index(b)) * d;
            let v = to_vec(e)?;
            consts[off..off + d].clone_from_slice(&v);
        }
        let unit = self.unit.as_ref().map(to_vec).transpose()?;
        Algebra::new(field, self.name.clone(), self.basis.clone(), consts, unit)
    }
}
