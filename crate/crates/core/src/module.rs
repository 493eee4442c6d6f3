// SPDX-License-Identifier: Apache-2.0

//! Finite-dimensional modules given by action matrices.
//!
//! Module elements are coordinate rows. A right module acts by
//! `m . b = m * act[b]`, so `act[b_i b_j] = act[b_i] * act[b_j]`. A left
//! module acts by `b . m = m * act[b]`, so `act[b_i b_j] = act[b_j] * act[b_i]`.
//! A homomorphism `M -> N` is a `dim M x dim N` matrix `F` with
//! `act_M[b] * F = F * act_N[b]` for every `b`; this reads the same on both sides.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, unit_vec, EchelonBasis, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }

    pub const BOTH: [Side; 2] = [Side::Right, Side::Left];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// A right or left module over a specific algebra.
#[derive(Clone)]
pub struct ModuleRep<F: Field> {
    algebra_id: u64,
    field: F,
    side: Side,
    dim: usize,
    actions: Vec<Matrix<F>>,
    generators: Arc<[usize]>,
    label: String,
}

impl<F: Field> fmt::Debug for ModuleRep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("label", &self.label)
            .field("side", &self.side)
            .field("dim", &self.dim)
            .finish()
    }
}

/// A basis of `Hom(M, N)`.
#[derive(Debug, Clone)]
pub struct HomSpace<F: Field> {
    pub basis: Vec<Matrix<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl<F: Field> ModuleRep<F> {
    /// Builds a module and checks the unit and multiplicativity laws on all
    /// basis pairs.
    pub fn new(
        alg: &Algebra<F>,
        side: Side,
        actions: Vec<Matrix<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let dim = actions.first().map_or(0, |m| m.rows());
        if actions.len() != alg.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                actions.len(),
                alg.dim()
            )));
        }
        if actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
        }
        let m = Self::from_parts(alg, side, dim, actions, label);
        m.check(alg)?;
        Ok(m)
    }

    pub(crate) fn from_parts(
        alg: &Algebra<F>,
        side: Side,
        dim: usize,
        actions: Vec<Matrix<F>>,
        label: impl Into<String>,
    ) -> Self {
        ModuleRep {
            algebra_id: alg.id(),
            field: alg.field().clone(),
            side,
            dim,
            actions,
            generators: alg.generators().into(),
            label: label.into(),
        }
    }

    fn derived(&self, dim: usize, actions: Vec<Matrix<F>>, label: String) -> Self {
        ModuleRep {
            algebra_id: self.algebra_id,
            field: self.field.clone(),
            side: self.side,
            dim,
            actions,
            generators: self.generators.clone(),
            label,
        }
    }

    /// Verifies the module axioms against `alg`.
    pub fn check(&self, alg: &Algebra<F>) -> Result<()> {
        if alg.id() != self.algebra_id {
            return Err(Error::AlgebraMismatch);
        }
        if self.action_of(alg.unit()) != Matrix::identity(&self.field, self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.action_of(alg.basis_product(i, j));
                let rhs = match self.side {
                    Side::Right => self.actions[i].mul(&self.actions[j])?,
                    Side::Left => self.actions[j].mul(&self.actions[i])?,
                };
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative on ({}, {})",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra_id(&self) -> u64 {
        self.algebra_id
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, x: &[F::Elem]) -> Matrix<F> {
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.actions) {
            if !self.field.is_zero(c) {
                m.add_scaled(c, a).expect("action shapes agree");
            }
        }
        m
    }

    /// `m . x` (right) or `x . m` (left).
    pub fn act(&self, m: &[F::Elem], x: &[F::Elem]) -> Vec<F::Elem> {
        self.action_of(x).vec_mul(m)
    }

    /// Smallest submodule containing `vectors`.
    pub fn spin(&self, vectors: &[Vec<F::Elem>]) -> EchelonBasis<F> {
        let mut span = EchelonBasis::new(&self.field, self.dim);
        self.spin_into(&mut span, vectors);
        span
    }

    fn spin_into(&self, span: &mut EchelonBasis<F>, vectors: &[Vec<F::Elem>]) {
        let mut frontier = Vec::new();
        for v in vectors {
            if span.insert(v) {
                frontier.push(v.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for &g in self.generators.iter() {
                let w = self.actions[g].vec_mul(&v);
                if span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
    }

    /// Whether the span of `basis` is closed under the action.
    pub fn is_submodule(&self, basis: &EchelonBasis<F>) -> bool {
        basis.rows().iter().all(|v| {
            self.generators.iter().all(|&g| basis.contains(&self.actions[g].vec_mul(v)))
        })
    }

    /// Submodule spanned by `vectors` with its inclusion (rows = embedded basis).
    pub fn submodule(&self, vectors: &[Vec<F::Elem>]) -> Result<(ModuleRep<F>, Matrix<F>)> {
        let mut basis = EchelonBasis::new(&self.field, self.dim);
        for v in vectors {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch("vector length differs from module dimension".into()));
            }
            basis.insert(v);
        }
        self.submodule_of(&basis)
    }

    pub(crate) fn submodule_of(&self, basis: &EchelonBasis<F>) -> Result<(ModuleRep<F>, Matrix<F>)> {
        let k = basis.dim();
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let mut rows = Vec::with_capacity(k);
            for v in basis.rows() {
                let w = a.vec_mul(v);
                let c = basis.coordinates(&w).ok_or_else(|| {
                    Error::NotASubmodule(format!("span is not closed in {}", self.label))
                })?;
                rows.push(c);
            }
            actions.push(Matrix::from_rows(&self.field, k, rows)?);
        }
        let inclusion = basis.to_matrix();
        let m = self.derived(k, actions, format!("sub({})", self.label));
        Ok((m, inclusion))
    }

    /// Quotient by the submodule spanned by `vectors`, with the projection
    /// matrix (`dim x dim_quotient`). The quotient basis is the images of
    /// the standard basis vectors at the non-pivot columns.
    pub fn quotient(&self, vectors: &[Vec<F::Elem>]) -> Result<(ModuleRep<F>, Matrix<F>)> {
        let mut basis = EchelonBasis::new(&self.field, self.dim);
        for v in vectors {
            basis.insert(v);
        }
        self.quotient_of(&basis)
    }

    pub(crate) fn quotient_of(&self, sub: &EchelonBasis<F>) -> Result<(ModuleRep<F>, Matrix<F>)> {
        if !self.is_submodule(sub) {
            return Err(Error::NotASubmodule(format!("span is not closed in {}", self.label)));
        }
        let f = &self.field;
        let keep = sub.non_pivots();
        let q = keep.len();
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = sub.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut proj_rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            proj_rows.push(project(&unit_vec(f, self.dim, i)));
        }
        let projection = Matrix::from_rows(f, q, proj_rows)?;
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let rows = keep.iter().map(|&c| project(a.row(c))).collect();
            actions.push(Matrix::from_rows(f, q, rows)?);
        }
        let m = self.derived(q, actions, format!("quot({})", self.label));
        Ok((m, projection))
    }

    /// Direct sum of modules over the same algebra and side.
    pub fn direct_sum(parts: &[&ModuleRep<F>]) -> Result<ModuleRep<F>> {
        let first = parts.first().ok_or_else(|| {
            Error::InvalidModule("direct sum of an empty list has no algebra".into())
        })?;
        for p in parts {
            ensure_compatible(first, p)?;
        }
        let dim = parts.iter().map(|p| p.dim).sum();
        let actions = (0..first.actions.len())
            .map(|b| {
                let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| &p.actions[b]).collect();
                Matrix::block_diag(&first.field, &blocks)
            })
            .collect();
        let label = parts.iter().map(|p| p.label.as_str()).collect::<Vec<_>>().join(" + ");
        Ok(first.derived(dim, actions, label))
    }

    /// `n` copies of `self`.
    pub fn power(&self, n: usize) -> ModuleRep<F> {
        let parts = vec![self; n];
        if n == 0 {
            return self.zero_module_like();
        }
        Self::direct_sum(&parts).expect("copies are compatible")
    }

    pub(crate) fn zero_module_like(&self) -> ModuleRep<F> {
        self.derived(0, self.zero_actions(0), "0".into())
    }

    fn zero_actions(&self, n: usize) -> Vec<Matrix<F>> {
        vec![Matrix::zeros(&self.field, n, n); self.actions.len()]
    }

    /// The dual `Hom_k(M, k)` on the opposite side: action matrices are transposed.
    pub fn dual(&self) -> ModuleRep<F> {
        ModuleRep {
            side: self.side.opposite(),
            actions: self.actions.iter().map(Matrix::transpose).collect(),
            label: format!("D({})", self.label),
            ..self.clone()
        }
    }

    /// Common kernel of the actions of `elements`.
    pub fn annihilated_by(&self, elements: &[Vec<F::Elem>]) -> EchelonBasis<F> {
        if elements.is_empty() || self.dim == 0 {
            let mut all = EchelonBasis::new(&self.field, self.dim);
            for i in 0..self.dim {
                all.insert(&unit_vec(&self.field, self.dim, i));
            }
            return all;
        }
        let mats: Vec<Matrix<F>> = elements.iter().map(|x| self.action_of(x)).collect();
        let refs: Vec<&Matrix<F>> = mats.iter().collect();
        let stacked = Matrix::hstack(&self.field, self.dim, &refs).expect("equal row counts");
        EchelonBasis::from_matrix(&stacked.left_kernel_basis())
    }

    /// Sum of the images of the actions of `elements`.
    pub fn image_of(&self, elements: &[Vec<F::Elem>]) -> EchelonBasis<F> {
        let mut span = EchelonBasis::new(&self.field, self.dim);
        for x in elements {
            let a = self.action_of(x);
            for i in 0..self.dim {
                span.insert(a.row(i));
            }
        }
        span
    }
}

pub(crate) fn ensure_compatible<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<()> {
    if m.algebra_id != n.algebra_id {
        return Err(Error::AlgebraMismatch);
    }
    if m.side != n.side {
        return Err(Error::SideMismatch);
    }
    Ok(())
}

/// Basis of `Hom(M, N)`.
///
/// `M` is spun from a few generators; a homomorphism is fixed by the images
/// of those generators, and the intertwining law only has to be imposed for
/// the algebra generators. The solution space shrinks constraint by constraint.
pub fn hom_space<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<HomSpace<F>> {
    ensure_compatible(m, n)?;
    let f = &m.field;
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(HomSpace { basis: Vec::new() });
    }
    let seeds = module_generators(m);
    let r = seeds.len();

    // spin with bookkeeping: entry t is v_t = seeds[gen_t] * word_t, and
    // f(v_t) = x_{gen_t} * word_t acting on N
    let mut span = EchelonBasis::new(f, dm);
    let mut vecs: Vec<Vec<F::Elem>> = Vec::with_capacity(dm);
    let mut gen_of: Vec<usize> = Vec::with_capacity(dm);
    let mut words: Vec<Matrix<F>> = Vec::with_capacity(dm);
    // (t, g, v_t * g) whose image is already in the span
    let mut pending: Vec<(usize, usize, Vec<F::Elem>)> = Vec::new();
    for (k, s) in seeds.iter().enumerate() {
        if !span.insert(s) {
            continue;
        }
        let mut queue = vec![vecs.len()];
        vecs.push(s.clone());
        gen_of.push(k);
        words.push(Matrix::identity(f, dn));
        while let Some(t) = queue.pop() {
            for &g in m.generators.iter() {
                let w = m.actions[g].vec_mul(&vecs[t]);
                if span.insert(&w) {
                    queue.push(vecs.len());
                    vecs.push(w);
                    gen_of.push(gen_of[t]);
                    words.push(words[t].mul(&n.actions[g])?);
                } else {
                    pending.push((t, g, w));
                }
            }
        }
    }
    if vecs.len() != dm {
        return Err(Error::InvariantViolation("module generators do not span".into()));
    }
    let basis = Matrix::from_rows(f, dm, vecs)?;
    let basis_inv = basis
        .inverse()
        .ok_or_else(|| Error::InvariantViolation("spin basis is singular".into()))?;

    // unknown x = (x_0 | ... | x_{r-1}), each block of length dn; k rows of
    // `sol` span the current solution space; images[s] = sol_block(gen_s) * words[s]
    let nvar = r * dn;
    let mut sol = Matrix::identity(f, nvar);
    let mut images: Vec<Matrix<F>> = (0..dm)
        .map(|s| {
            let block = sol.block_cols(gen_of[s] * dn, dn);
            block.mul(&words[s]).expect("shapes agree")
        })
        .collect();

    let chunk = 4.max(nvar / dn.max(1));
    for batch in pending.chunks(chunk) {
        if sol.rows() == 0 {
            break;
        }
        let mut parts = Vec::with_capacity(batch.len());
        for (t, g, w) in batch {
            // f(v_t g) - f(v_t) g = sum_s c_s f(v_s) - f(v_t) g
            let c = basis_inv.vec_mul(w);
            let mut lhs = images[*t].mul(&n.actions[*g])?;
            let minus_one = f.neg(&f.one());
            lhs = lhs.scale(&minus_one);
            for (s, cs) in c.iter().enumerate() {
                if !f.is_zero(cs) {
                    lhs.add_scaled(cs, &images[s])?;
                }
            }
            parts.push(lhs);
        }
        let refs: Vec<&Matrix<F>> = parts.iter().collect();
        let stacked = Matrix::hstack(f, sol.rows(), &refs)?;
        if stacked.is_zero() {
            continue;
        }
        let t = stacked.left_kernel_basis();
        sol = t.mul(&sol)?;
        for img in images.iter_mut() {
            *img = t.mul(img)?;
        }
    }

    // row i of sol gives f(v_s) = images[s].row(i); F = B^{-1} Y
    let mut out = Vec::with_capacity(sol.rows());
    for i in 0..sol.rows() {
        let rows = images.iter().map(|img| img.row(i).to_vec()).collect();
        let y = Matrix::from_rows(f, dn, rows)?;
        out.push(basis_inv.mul(&y)?);
    }
    Ok(HomSpace { basis: out })
}

pub fn hom_dim<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

/// Whether `h` intertwines the actions of `m` and `n`.
pub fn is_homomorphism<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, h: &Matrix<F>) -> bool {
    if h.rows() != m.dim || h.cols() != n.dim {
        return false;
    }
    m.actions.iter().zip(&n.actions).all(|(a, b)| {
        a.mul(h).expect("shapes agree") == h.mul(b).expect("shapes agree")
    })
}

/// A small generating set: greedy, preferring candidates whose spin grows the most.
fn module_generators<F: Field>(m: &ModuleRep<F>) -> Vec<Vec<F::Elem>> {
    let f = &m.field;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ m.dim as u64);
    let mut span = EchelonBasis::new(f, m.dim);
    let mut gens = Vec::new();
    let mut next_unit = 0;
    while span.dim() < m.dim {
        let mut candidates = Vec::with_capacity(4);
        for _ in 0..2 {
            let v: Vec<F::Elem> =
                (0..m.dim).map(|_| if rng.gen_bool(0.5) { f.one() } else { f.zero() }).collect();
            if !is_zero_vec(f, &v) && !span.contains(&v) {
                candidates.push(v);
            }
        }
        // first standard vector outside the span; earlier ones are inside
        while next_unit < m.dim {
            let e = unit_vec(f, m.dim, next_unit);
            if !span.contains(&e) {
                candidates.push(e);
                break;
            }
            next_unit += 1;
        }
        let mut best: Option<(usize, Vec<F::Elem>, EchelonBasis<F>)> = None;
        for c in candidates {
            let mut trial = span.clone();
            m.spin_into(&mut trial, std::slice::from_ref(&c));
            if best.as_ref().is_none_or(|(d, _, _)| trial.dim() > *d) {
                best = Some((trial.dim(), c, trial));
            }
        }
        let (_, v, grown) = best.expect("some standard basis vector lies outside a proper span");
        gens.push(v);
        span = grown;
    }
    gens
}

/// Regular module `A_A` (right) or `_A A` (left).
pub fn regular<F: Field>(alg: &Algebra<F>, side: Side) -> ModuleRep<F> {
    let actions = (0..alg.dim())
        .map(|t| {
            let b = alg.basis_element(t);
            match side {
                Side::Right => alg.right_mult_matrix(&b),
                Side::Left => alg.left_mult_matrix(&b),
            }
            .expect("basis element has algebra length")
        })
        .collect();
    let label = match side {
        Side::Right => "A_A",
        Side::Left => "_A A",
    };
    ModuleRep::from_parts(alg, side, alg.dim(), actions, label)
}

/// `M * J` for a right module (`J * M` for a left one), given a spanning set of `J`.
pub fn radical_submodule_with<F: Field>(m: &ModuleRep<F>, j: &[Vec<F::Elem>]) -> EchelonBasis<F> {
    m.image_of(j)
}

/// Elements of `M` killed by `J`.
pub fn socle_with<F: Field>(m: &ModuleRep<F>, j: &[Vec<F::Elem>]) -> EchelonBasis<F> {
    m.annihilated_by(j)
}

/// `M / M J` with its projection.
pub fn top_with<F: Field>(m: &ModuleRep<F>, j: &[Vec<F::Elem>]) -> Result<(ModuleRep<F>, Matrix<F>)> {
    let rad = radical_submodule_with(m, j);
    let (t, p) = m.quotient_of(&rad)?;
    Ok((t.with_label(format!("top({})", m.label)), p))
}

fn radical_rows<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<Vec<Vec<F::Elem>>> {
    if alg.id() != m.algebra_id {
        return Err(Error::AlgebraMismatch);
    }
    Ok(alg.structure()?.radical().rows().to_vec())
}

/// `soc(M)`: the elements annihilated by the radical.
pub fn socle<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<EchelonBasis<F>> {
    Ok(socle_with(m, &radical_rows(alg, m)?))
}

/// `rad(M) = M J` (right) or `J M` (left).
pub fn radical_submodule<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<EchelonBasis<F>> {
    Ok(radical_submodule_with(m, &radical_rows(alg, m)?))
}

/// `top(M) = M / rad(M)` with its projection.
pub fn top_quotient<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<(ModuleRep<F>, Matrix<F>)> {
    top_with(m, &radical_rows(alg, m)?)
}

/// The socle as a module in its own right.
pub fn socle_module<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<ModuleRep<F>> {
    let soc = socle(alg, m)?;
    let (s, _) = m.submodule_of(&soc)?;
    Ok(s.with_label(format!("soc({})", m.label)))
}

/// Multiplicity of each simple class in a semisimple module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimpleDecomposition {
    pub multiplicities: Vec<usize>,
}

impl SemisimpleDecomposition {
    pub fn classes(&self) -> impl Iterator<Item = usize> + '_ {
        self.multiplicities.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, _)| i)
    }

    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// Multiplicities of the simples (of the module's side) in a semisimple `X`.
pub fn decompose_semisimple<F: Field>(
    alg: &Algebra<F>,
    x: &ModuleRep<F>,
) -> Result<SemisimpleDecomposition> {
    if !radical_submodule(alg, x)?.rows().is_empty() {
        return Err(Error::NotSemisimple);
    }
    let st = alg.structure()?;
    let simples = st.simples(x.side());
    let mut multiplicities = Vec::with_capacity(simples.len());
    let mut total = 0;
    for (i, s) in simples.iter().enumerate() {
        let h = hom_dim(s, x)?;
        let d = st.endo_dim(i);
        multiplicities.push(h / d);
        total += (h / d) * s.dim();
    }
    if total != x.dim() {
        return Err(Error::IncompleteDecomposition(format!(
            "simples account for {total} of {} dimensions",
            x.dim()
        )));
    }
    Ok(SemisimpleDecomposition { multiplicities })
}

/// Multiplicities of the simples in `soc(M)`.
pub fn socle_decomposition<F: Field>(
    alg: &Algebra<F>,
    m: &ModuleRep<F>,
) -> Result<SemisimpleDecomposition> {
    decompose_semisimple(alg, &socle_module(alg, m)?)
}

/// Multiplicities of the simples in `top(M)`.
pub fn top_decomposition<F: Field>(
    alg: &Algebra<F>,
    m: &ModuleRep<F>,
) -> Result<SemisimpleDecomposition> {
    decompose_semisimple(alg, &top_quotient(alg, m)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn t2() -> Algebra<Rationals> {
        Algebra::triangular_algebra(&Rationals, 2).unwrap()
    }

    #[test]
    fn regular_modules_are_modules() {
        let a = t2();
        for side in Side::BOTH {
            regular(&a, side).check(&a).unwrap();
            regular(&a, side).dual().check(&a).unwrap();
        }
    }

    #[test]
    fn endomorphisms_of_regular_module() {
        // End(A_A) = A
        let f = PrimeField::new(7).unwrap();
        for a in [
            Algebra::triangular_algebra(&f, 3).unwrap(),
            Algebra::matrix_algebra(&f, 2).unwrap(),
            Algebra::truncated_poly(&f, 3).unwrap(),
        ] {
            for side in Side::BOTH {
                let r = regular(&a, side);
                let h = hom_space(&r, &r).unwrap();
                assert_eq!(h.dim(), a.dim());
                assert!(h.basis.iter().all(|m| is_homomorphism(&r, &r, m)));
            }
        }
    }

    #[test]
    fn hom_from_simples_into_triangular() {
        let a = t2();
        let st = a.structure().unwrap();
        let r = regular(&a, Side::Right);
        let s = st.simples(Side::Right);
        assert_eq!(hom_dim(&s[0], &r).unwrap(), 0);
        assert_eq!(hom_dim(&s[1], &r).unwrap(), 2);
        assert_eq!(hom_dim(&s[0], &s[0]).unwrap(), 1);
    }

    #[test]
    fn socle_and_radical_of_triangular() {
        let a = t2();
        let r = regular(&a, Side::Right);
        let soc = socle(&a, &r).unwrap();
        assert_eq!(soc.dim(), 2);
        let rad = radical_submodule(&a, &r).unwrap();
        assert_eq!(rad.rows(), &[a.basis_element(1)]);
        let d = socle_decomposition(&a, &r).unwrap();
        assert_eq!(d.multiplicities, vec![0, 2]);
        let t = top_decomposition(&a, &r).unwrap();
        assert_eq!(t.multiplicities, vec![1, 1]);
    }

    #[test]
    fn dual_of_right_simple() {
        let a = t2();
        let st = a.structure().unwrap();
        let d = st.simples(Side::Right)[1].dual();
        assert_eq!(d.side(), Side::Left);
        // E22 acts as 1
        assert_eq!(d.actions()[2], Matrix::identity(&Rationals, 1));
        assert_eq!(hom_dim(&d, &st.simples(Side::Left)[1]).unwrap(), 1);
        assert_eq!(d.dual().actions(), st.simples(Side::Right)[1].actions());
    }

    #[test]
    fn quotient_and_direct_sum() {
        let a = t2();
        let st = a.structure().unwrap();
        let s = st.simples(Side::Right);
        let sum = ModuleRep::direct_sum(&[&s[0], &s[1]]).unwrap();
        assert_eq!(sum.dim(), 2);
        assert!(radical_submodule(&a, &sum).unwrap().rows().is_empty());
        let r = regular(&a, Side::Right);
        assert_eq!(r.spin(&[a.unit().to_vec()]).dim(), 3);
        let e11 = a.basis_element(0);
        assert!(matches!(r.quotient(&[e11]), Err(Error::NotASubmodule(_))));
        let zero = s[0].zero_module_like();
        assert_eq!(decompose_semisimple(&a, &zero).unwrap().total(), 0);
    }

    #[test]
    fn side_and_algebra_mismatch() {
        let a = t2();
        let b = t2();
        let ra = regular(&a, Side::Right);
        assert_eq!(hom_space(&ra, &regular(&a, Side::Left)).unwrap_err(), Error::SideMismatch);
        assert_eq!(hom_space(&ra, &regular(&b, Side::Right)).unwrap_err(), Error::AlgebraMismatch);
    }
}
