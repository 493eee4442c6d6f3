// SPDX-License-Identifier: Apache-2.0

//! Finite-dimensional unital associative algebras given by structure constants.

mod construct;
mod group;

pub use construct::Bimodule;
pub use group::{GroupAction, GroupTable};

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vec, solve, EchelonBasis, Matrix};
use crate::wedderburn::Structure;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// A finite-dimensional unital associative algebra over `F`.
///
/// Basis products are `b_i * b_j = sum_k c[i][j][k] b_k`. Elements are
/// coordinate rows of length `dim`. Values are immutable once built; derived
/// structure (radical, idempotents, simples) is computed lazily and cached.
pub struct Algebra<F: Field> {
    id: u64,
    name: String,
    field: F,
    dim: usize,
    consts: Vec<F::Elem>,
    unit: Vec<F::Elem>,
    labels: Vec<String>,
    commutative: bool,
    structure: OnceLock<Result<Arc<Structure<F>>>>,
    generators: OnceLock<Vec<usize>>,
}

impl<F: Field> Clone for Algebra<F> {
    fn clone(&self) -> Self {
        Algebra {
            id: self.id,
            name: self.name.clone(),
            field: self.field.clone(),
            dim: self.dim,
            consts: self.consts.clone(),
            unit: self.unit.clone(),
            labels: self.labels.clone(),
            commutative: self.commutative,
            structure: self.structure.clone(),
            generators: self.generators.clone(),
        }
    }
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("field", &self.field.spec())
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish()
    }
}

/// A failed algebra axiom, with the basis indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `(b_i b_j) b_l != b_i (b_j b_l)`
    Associativity { i: usize, j: usize, l: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<F: Field> Algebra<F> {
    /// Builds and validates an algebra. When `unit` is `None` the unit is
    /// solved for; its absence is [`Error::NonUnitalResult`].
    pub fn new(
        field: &F,
        name: impl Into<String>,
        labels: Vec<String>,
        consts: Vec<F::Elem>,
        unit: Option<Vec<F::Elem>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateBasisLabel(l.clone()));
            }
        }
        let unit = match unit {
            Some(u) => u,
            None => find_unit(field, dim, &consts)?.ok_or(Error::NonUnitalResult)?,
        };
        let alg = Self::new_unchecked(field, name, labels, consts, unit)?;
        let report = alg.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidAlgebra(format!(
                "{} ({} violation(s) in total)",
                alg.describe_violation(v),
                report.violations.len()
            )));
        }
        Ok(alg)
    }

    /// Builds an algebra without checking associativity or the unit law.
    /// Shapes are still checked. Use [`Algebra::validate`] to inspect it.
    pub fn new_unchecked(
        field: &F,
        name: impl Into<String>,
        labels: Vec<String>,
        consts: Vec<F::Elem>,
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        let dim = labels.len();
        if consts.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} structure constants and unit of length {} for dimension {dim}",
                consts.len(),
                unit.len()
            )));
        }
        let mut alg = Algebra {
            id: fresh_id(),
            name: name.into(),
            field: field.clone(),
            dim,
            consts,
            unit,
            labels,
            commutative: false,
            structure: OnceLock::new(),
            generators: OnceLock::new(),
        };
        alg.commutative = (0..dim)
            .all(|i| (0..i).all(|j| alg.basis_product(i, j) == alg.basis_product(j, i)));
        Ok(alg)
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// A copy under a different name; identity and caches are shared.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Algebra { name: name.into(), ..self.clone() }
    }

    /// Coordinates of `b_i * b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        let d = self.dim;
        &self.consts[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn structure_constants(&self) -> &[F::Elem] {
        &self.consts
    }

    /// Same field, dimension, constants, unit, and labels.
    pub fn structurally_eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.consts == other.consts
            && self.unit == other.unit
            && self.labels == other.labels
    }

    pub fn zero_element(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F::Elem> {
        crate::linalg::unit_vec(&self.field, self.dim, i)
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                axpy(f, &mut out, &c, self.basis_product(i, j));
            }
        }
        out
    }

    fn check_len(&self, x: &[F::Elem]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in an algebra of dimension {}",
                x.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Matrix `M` with `y * M = x y` for every coordinate row `y`.
    pub fn left_mult_matrix(&self, x: &[F::Elem]) -> Result<Matrix<F>> {
        self.check_len(x)?;
        let rows = (0..self.dim).map(|k| self.mul(x, &self.basis_element(k))).collect();
        Matrix::from_rows(&self.field, self.dim, rows)
    }

    /// Matrix `M` with `y * M = y x` for every coordinate row `y`.
    pub fn right_mult_matrix(&self, x: &[F::Elem]) -> Result<Matrix<F>> {
        self.check_len(x)?;
        let rows = (0..self.dim).map(|k| self.mul(&self.basis_element(k), x)).collect();
        Matrix::from_rows(&self.field, self.dim, rows)
    }

    /// Checks associativity on all basis triples and the unit law.
    pub fn validate(&self) -> ValidationReport {
        let f = &self.field;
        let d = self.dim;
        let mut violations = Vec::new();
        for i in 0..d {
            let ei = self.basis_element(i);
            if self.mul(&self.unit, &ei) != ei {
                violations.push(Violation::LeftUnit { i });
            }
            if self.mul(&ei, &self.unit) != ei {
                violations.push(Violation::RightUnit { i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let bij = self.basis_product(i, j);
                for l in 0..d {
                    // (b_i b_j) b_l
                    let mut lhs = self.zero_element();
                    for (k, c) in bij.iter().enumerate() {
                        if !f.is_zero(c) {
                            axpy(f, &mut lhs, c, self.basis_product(k, l));
                        }
                    }
                    // b_i (b_j b_l)
                    let mut rhs = self.zero_element();
                    for (k, c) in self.basis_product(j, l).iter().enumerate() {
                        if !f.is_zero(c) {
                            axpy(f, &mut rhs, c, self.basis_product(i, k));
                        }
                    }
                    if lhs != rhs {
                        violations.push(Violation::Associativity { i, j, l });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn describe_violation(&self, v: &Violation) -> String {
        let l = &self.labels;
        match *v {
            Violation::Associativity { i, j, l: k } => {
                format!("({}*{})*{} != {}*({}*{})", l[i], l[j], l[k], l[i], l[j], l[k])
            }
            Violation::LeftUnit { i } => format!("1*{} != {}", l[i], l[i]),
            Violation::RightUnit { i } => format!("{}*1 != {}", l[i], l[i]),
        }
    }

    /// Basis indices that, together with the unit, generate the algebra.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut span = EchelonBasis::new(&self.field, self.dim);
            span.insert(&self.unit);
            for i in 0..self.dim {
                if span.contains(&self.basis_element(i)) {
                    continue;
                }
                gens.push(i);
                // subalgebra generated so far = span of words in the generators
                let mut frontier: Vec<Vec<F::Elem>> = span.rows().to_vec();
                while let Some(v) = frontier.pop() {
                    for &g in &gens {
                        let w = self.mul(&v, &self.basis_element(g));
                        if span.insert(&w) {
                            frontier.push(w);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Cached structure theory (radical, idempotents, simple modules).
    pub fn structure(&self) -> Result<Arc<Structure<F>>> {
        self.structure.get_or_init(|| Structure::compute(self).map(Arc::new)).clone()
    }

    /// Span of all products `x y` with `x` in `a` and `y` in `b` (bases as rows).
    pub fn product_span(&self, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> EchelonBasis<F> {
        let mut span = EchelonBasis::new(&self.field, self.dim);
        for x in a {
            for y in b {
                let p = self.mul(x, y);
                if !is_zero_vec(&self.field, &p) {
                    span.insert(&p);
                }
            }
        }
        span
    }
}

fn find_unit<F: Field>(field: &F, d: usize, consts: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    if consts.len() != d * d * d {
        return Err(Error::DimensionMismatch("structure constant count".into()));
    }
    // unknown u (row); u * M = target where column (i,k) encodes (u b_i)_k and
    // column d*d + (i,k) encodes (b_i u)_k
    let mut m = Matrix::zeros(field, d, 2 * d * d);
    let mut target = vec![field.zero(); 2 * d * d];
    for t in 0..d {
        for i in 0..d {
            for k in 0..d {
                m.set(t, i * d + k, consts[(t * d + i) * d + k].clone());
                m.set(t, d * d + i * d + k, consts[(i * d + t) * d + k].clone());
            }
        }
    }
    for i in 0..d {
        target[i * d + i] = field.one();
        target[d * d + i * d + i] = field.one();
    }
    let rhs = Matrix::from_vec(field, 2 * d * d, 1, target)?;
    Ok(solve(&m.transpose(), &rhs)?.map(|x| x.data().to_vec()))
}
