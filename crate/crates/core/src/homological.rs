// SPDX-License-Identifier: Apache-2.0

//! Projective and injective modules, covers and hulls.
//!
//! Projectivity is decided by comparing dimensions after reading off the
//! top: if `top(M) = ⊕ S_i^{m_i}`, a lift of the top isomorphism gives a
//! surjection `⊕ (e_i A)^{m_i} -> M` (Nakayama), which is an isomorphism
//! exactly when the dimensions agree. Injectivity is projectivity of the
//! dual on the other side.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{solve, EchelonBasis, Matrix};
use crate::module::{
    hom_space, is_homomorphism, regular, socle_decomposition, top_decomposition, top_quotient,
    ModuleRep, SemisimpleDecomposition, Side,
};

/// Largest number of non-zero vectors enumerated by the max-projectivity test.
pub const MAX_PROJECTIVE_BUDGET: u64 = 1_000_000;

fn check_class<F: Field>(alg: &Algebra<F>, class: usize) -> Result<()> {
    let s = alg.structure()?.num_classes();
    if class >= s {
        return Err(Error::InvalidModule(format!("class {} out of range (1..={s})", class + 1)));
    }
    Ok(())
}

/// `e_i A` (right) or `A e_i` (left) for the class representative `e_i`.
pub fn projective_indecomposable<F: Field>(
    alg: &Algebra<F>,
    side: Side,
    class: usize,
) -> Result<ModuleRep<F>> {
    check_class(alg, class)?;
    let st = alg.structure()?;
    let e = st.class_idempotent(class);
    let span = match side {
        Side::Right => alg.left_mult_matrix(e)?,
        Side::Left => alg.right_mult_matrix(e)?,
    };
    let (p, _) = regular(alg, side).submodule(&span.row_vecs())?;
    let label = match side {
        Side::Right => format!("e{}·A", class + 1),
        Side::Left => format!("A·e{}", class + 1),
    };
    Ok(p.with_label(label))
}

/// Injective hull of the simple of class `i`: `D(A e_i)` (right) or `D(e_i A)` (left).
pub fn injective_indecomposable<F: Field>(
    alg: &Algebra<F>,
    side: Side,
    class: usize,
) -> Result<ModuleRep<F>> {
    let p = projective_indecomposable(alg, side.opposite(), class)?;
    Ok(p.dual().with_label(format!("E(S{})", class + 1)))
}

/// Outcome of the dimension-after-top projectivity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectivityCheck {
    pub projective: bool,
    /// Multiplicities of the simples in the top.
    pub top: Vec<usize>,
    /// `dim ⊕ P_i^{m_i}`.
    pub cover_dim: usize,
    pub dim: usize,
}

pub fn projectivity<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<ProjectivityCheck> {
    let top = top_decomposition(alg, m)?;
    let mut cover_dim = 0;
    for (i, &k) in top.multiplicities.iter().enumerate() {
        if k > 0 {
            cover_dim += k * projective_indecomposable(alg, m.side(), i)?.dim();
        }
    }
    Ok(ProjectivityCheck {
        projective: cover_dim == m.dim(),
        top: top.multiplicities,
        cover_dim,
        dim: m.dim(),
    })
}

pub fn is_projective<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<bool> {
    Ok(projectivity(alg, m)?.projective)
}

/// `M` is injective iff `D(M)` is projective.
pub fn injectivity<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<ProjectivityCheck> {
    projectivity(alg, &m.dual())
}

pub fn is_injective<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<bool> {
    Ok(injectivity(alg, m)?.projective)
}

/// An injective hull `M -> E(M)`.
#[derive(Debug, Clone)]
pub struct HullEmbedding<F: Field> {
    pub module: ModuleRep<F>,
    pub hull: ModuleRep<F>,
    /// `dim M x dim E(M)`.
    pub embedding: Matrix<F>,
    /// Socle multiplicities of `M`, which are those of `E(M)`.
    pub socle: SemisimpleDecomposition,
}

/// `E(M) = ⊕ E(S_i)^{m_i}` where `soc(M) = ⊕ S_i^{m_i}`, with an embedding
/// extending a chosen isomorphism of socles.
pub fn injective_hull<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<HullEmbedding<F>> {
    let f = alg.field();
    let st = alg.structure()?;
    let side = m.side();
    let socle = socle_decomposition(alg, m)?;
    if m.dim() == 0 {
        let hull = m.zero_module_like();
        return Ok(HullEmbedding {
            module: m.clone(),
            hull,
            embedding: Matrix::zeros(f, 0, 0),
            socle,
        });
    }

    // summands and the boundary data on the socle
    let mut summands = Vec::new();
    // (socle map S_i -> M, socle map S_i -> E, offset of the summand in E)
    let mut boundary: Vec<(Matrix<F>, Matrix<F>, usize)> = Vec::new();
    let mut offset = 0;
    for (i, &mult) in socle.multiplicities.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let s = &st.simples(side)[i];
        let inj = injective_indecomposable(alg, side, i)?;
        let into_m = hom_space(s, m)?.basis;
        let into_e = hom_space(s, &inj)?.basis;
        if into_m.len() != mult || into_e.len() != 1 {
            return Err(Error::InvariantViolation(format!(
                "socle maps for class {} have unexpected dimensions",
                i + 1
            )));
        }
        for phi in into_m {
            boundary.push((phi, into_e[0].clone(), offset));
            offset += inj.dim();
            summands.push(inj.clone());
        }
    }
    let refs: Vec<&ModuleRep<F>> = summands.iter().collect();
    let hull = ModuleRep::direct_sum(&refs)?.with_label(format!("E({})", m.label()));
    let homs = hom_space(m, &hull)?.basis;

    // unknown coefficients c_k with sum_k c_k (phi * H_k) = psi placed at its offset
    let mut eq_rows: Vec<Vec<F::Elem>> = vec![Vec::new(); homs.len()];
    let mut rhs: Vec<F::Elem> = Vec::new();
    for (phi, psi, off) in &boundary {
        for (k, h) in homs.iter().enumerate() {
            eq_rows[k].extend_from_slice(phi.mul(h)?.data());
        }
        let mut target = Matrix::zeros(f, psi.rows(), hull.dim());
        for r in 0..psi.rows() {
            for c in 0..psi.cols() {
                target.set(r, off + c, psi.get(r, c).clone());
            }
        }
        rhs.extend_from_slice(target.data());
    }
    let neq = rhs.len();
    let a = Matrix::from_rows(f, neq, eq_rows)?.transpose();
    let b = Matrix::from_vec(f, neq, 1, rhs)?;
    let c = solve(&a, &b)?.ok_or_else(|| {
        Error::ExtensionSystemInconsistent(format!("no extension of the socle map of {}", m.label()))
    })?;
    let mut embedding = Matrix::zeros(f, m.dim(), hull.dim());
    for (ck, h) in c.data().iter().zip(&homs) {
        if !f.is_zero(ck) {
            embedding.add_scaled(ck, h)?;
        }
    }
    if embedding.rank() != m.dim() || !is_homomorphism(m, &hull, &embedding) {
        return Err(Error::InvariantViolation(format!(
            "hull map of {} is not an injective homomorphism",
            m.label()
        )));
    }
    Ok(HullEmbedding { module: m.clone(), hull, embedding, socle })
}

/// A projective cover `P(M) -> M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover<F: Field> {
    pub module: ModuleRep<F>,
    pub cover: ModuleRep<F>,
    /// `dim P x dim M`.
    pub surjection: Matrix<F>,
    pub top: SemisimpleDecomposition,
}

/// `P(M) = ⊕ P_i^{m_i}` where `top(M) = ⊕ S_i^{m_i}`; each summand is sent
/// to `M` through an element of `M e_i` lifting part of the top.
pub fn projective_cover<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<ProjectiveCover<F>> {
    let f = alg.field();
    let st = alg.structure()?;
    let side = m.side();
    let top = top_decomposition(alg, m)?;
    let (_, proj) = top_quotient(alg, m)?;
    let mut parts = Vec::new();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (i, &mult) in top.multiplicities.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let e = st.class_idempotent(i);
        let p = projective_indecomposable(alg, side, i)?;
        let span = match side {
            Side::Right => alg.left_mult_matrix(e)?,
            Side::Left => alg.right_mult_matrix(e)?,
        };
        let p_basis = EchelonBasis::from_matrix(&span);
        let me = m.action_of(e);
        let mut chosen = EchelonBasis::new(f, proj.cols());
        let mut gens = Vec::new();
        for r in 0..me.rows() {
            if gens.len() == mult {
                break;
            }
            let v = me.row(r).to_vec();
            if chosen.insert(&proj.vec_mul(&v)) {
                gens.push(v);
            }
        }
        if gens.len() != mult {
            return Err(Error::InvariantViolation(format!(
                "top of {} does not lift along class {}",
                m.label(),
                i + 1
            )));
        }
        for g in gens {
            for v in p_basis.rows() {
                rows.push(m.act(&g, v));
            }
            parts.push(p.clone());
        }
    }
    let refs: Vec<&ModuleRep<F>> = parts.iter().collect();
    let cover = if refs.is_empty() {
        m.zero_module_like()
    } else {
        ModuleRep::direct_sum(&refs)?.with_label(format!("P({})", m.label()))
    };
    let surjection = Matrix::from_rows(f, m.dim(), rows)?;
    if surjection.rank() != m.dim() || !is_homomorphism(&cover, m, &surjection) {
        return Err(Error::InvariantViolation(format!(
            "cover map of {} is not a surjective homomorphism",
            m.label()
        )));
    }
    Ok(ProjectiveCover { module: m.clone(), cover, surjection, top })
}

/// Every map `M -> S` to a simple factors through each non-zero `A -> S`.
/// Only over prime fields, by enumerating `A -> S` up to scalars.
pub fn is_max_projective<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<bool> {
    let f = alg.field();
    let p = f.characteristic();
    if p == 0 {
        return Err(Error::UnsupportedField(
            "max-projectivity enumerates maps and needs a finite field".into(),
        ));
    }
    let st = alg.structure()?;
    let side = m.side();
    let reg = regular(alg, side);
    let into_a = hom_space(m, &reg)?.basis;
    for s in st.simples(side) {
        let budget = (p as f64).powi(s.dim() as i32) - 1.0;
        if budget > MAX_PROJECTIVE_BUDGET as f64 {
            return Err(Error::UnsupportedField(format!(
                "{}^{} - 1 maps exceed the enumeration budget of {MAX_PROJECTIVE_BUDGET}",
                p,
                s.dim()
            )));
        }
        let target = hom_space(m, s)?.dim();
        if target == 0 {
            continue;
        }
        for v in normalized_vectors(f, s.dim()) {
            // phi(b_t) = v . b_t
            let phi_rows = (0..alg.dim()).map(|t| s.actions()[t].vec_mul(&v)).collect();
            let phi = Matrix::from_rows(f, s.dim(), phi_rows)?;
            let mut image = EchelonBasis::new(f, m.dim() * s.dim());
            for g in &into_a {
                image.insert(g.mul(&phi)?.data());
                if image.dim() == target {
                    break;
                }
            }
            if image.dim() < target {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Non-zero vectors of `GF(p)^n` whose first non-zero entry is 1.
fn normalized_vectors<F: Field>(f: &F, n: usize) -> impl Iterator<Item = Vec<F::Elem>> + '_ {
    let p = f.characteristic();
    (0..n).flat_map(move |lead| {
        let tail = n - lead - 1;
        let count = p.pow(tail as u32);
        (0..count).map(move |mut k| {
            let mut v = vec![f.zero(); n];
            v[lead] = f.one();
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = f.from_i64((k % p) as i64);
                k /= p;
            }
            v
        })
    })
}

/// Layers `M J^k / M J^{k+1}` and their semisimple decompositions.
pub fn radical_layers<F: Field>(
    alg: &Algebra<F>,
    m: &ModuleRep<F>,
) -> Result<Vec<SemisimpleDecomposition>> {
    let st = alg.structure()?;
    let j = st.radical().rows().to_vec();
    let mut layers = Vec::new();
    let mut current = EchelonBasis::new(alg.field(), m.dim());
    for i in 0..m.dim() {
        current.insert(&crate::linalg::unit_vec(alg.field(), m.dim(), i));
    }
    while current.dim() > 0 {
        let mut next = EchelonBasis::new(alg.field(), m.dim());
        for v in current.rows() {
            for x in &j {
                next.insert(&m.act(v, x));
            }
        }
        let (sub, _) = m.submodule_of(&current)?;
        let coords: Vec<Vec<F::Elem>> = next
            .rows()
            .iter()
            .map(|v| current.coordinates(v).expect("M J^(k+1) lies in M J^k"))
            .collect();
        let (layer, _) = sub.quotient(&coords)?;
        layers.push(crate::module::decompose_semisimple(alg, &layer)?);
        current = next;
    }
    Ok(layers)
}

/// `c[i][j]` = multiplicity of `S_j` as a composition factor of `e_i A`.
pub fn cartan_matrix<F: Field>(alg: &Algebra<F>) -> Result<Vec<Vec<usize>>> {
    let s = alg.structure()?.num_classes();
    let mut c = Vec::with_capacity(s);
    for i in 0..s {
        let p = projective_indecomposable(alg, Side::Right, i)?;
        let mut row = vec![0; s];
        for layer in radical_layers(alg, &p)? {
            for (j, k) in layer.multiplicities.iter().enumerate() {
                row[j] += k;
            }
        }
        c.push(row);
    }
    Ok(c)
}

/// Hereditary on the given side: the radical is a projective one-sided ideal.
pub fn is_hereditary<F: Field>(alg: &Algebra<F>, side: Side) -> Result<bool> {
    let st = alg.structure()?;
    if st.radical().dim() == 0 {
        return Ok(true);
    }
    let (j, _) = regular(alg, side).submodule(st.radical().rows())?;
    is_projective(alg, &j)
}

/// Goldie dimension of a finite-dimensional module: the length of its socle.
pub fn goldie_dimension<F: Field>(alg: &Algebra<F>, m: &ModuleRep<F>) -> Result<usize> {
    Ok(socle_decomposition(alg, m)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::module::{hom_dim, socle_module};

    #[test]
    fn triangular_injectives() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let st = t2.structure().unwrap();
        let e2 = injective_indecomposable(&t2, Side::Right, 1).unwrap();
        assert_eq!(e2.dim(), 2);
        let top = top_decomposition(&t2, &e2).unwrap();
        assert_eq!(top.multiplicities, vec![1, 0]);
        let soc = socle_module(&t2, &e2).unwrap();
        assert_eq!(hom_dim(&st.simples(Side::Right)[1], &soc).unwrap(), 1);
        assert!(is_injective(&t2, &e2).unwrap());
        assert!(is_projective(&t2, &e2).unwrap());
    }

    #[test]
    fn hull_of_triangular_regular_module() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let r = regular(&t2, Side::Right);
        assert!(!is_injective(&t2, &r).unwrap());
        let h = injective_hull(&t2, &r).unwrap();
        assert_eq!(h.hull.dim(), 4);
        assert!(is_injective(&t2, &h.hull).unwrap());
        assert_eq!(goldie_dimension(&t2, &r).unwrap(), 2);
    }

    #[test]
    fn hull_of_injective_module_is_bijective() {
        let f = PrimeField::new(101).unwrap();
        let d = Algebra::truncated_poly(&f, 2).unwrap();
        let r = regular(&d, Side::Right);
        let h = injective_hull(&d, &r).unwrap();
        assert_eq!(h.hull.dim(), 2);
        assert_eq!(h.embedding.rank(), 2);
    }

    #[test]
    fn cartan_and_hereditary() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        assert_eq!(cartan_matrix(&t2).unwrap(), vec![vec![1, 1], vec![0, 1]]);
        assert!(is_hereditary(&t2, Side::Right).unwrap());
        let d = Algebra::truncated_poly(&q, 2).unwrap();
        assert!(!is_hereditary(&d, Side::Right).unwrap());
    }

    #[test]
    fn projective_cover_of_simple() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let st = t2.structure().unwrap();
        let c = projective_cover(&t2, &st.simples(Side::Right)[0]).unwrap();
        assert_eq!(c.cover.dim(), 2);
        let c = projective_cover(&t2, &st.simples(Side::Left)[1]).unwrap();
        assert_eq!(c.cover.dim(), 2);
    }

    #[test]
    fn max_projectivity() {
        let f = PrimeField::new(7).unwrap();
        let t2 = Algebra::triangular_algebra(&f, 2).unwrap();
        let r = regular(&t2, Side::Right);
        assert!(is_max_projective(&t2, &r).unwrap());
        // E(T2) = (e1·A)^2 is projective, hence max-projective
        let e = injective_hull(&t2, &r).unwrap().hull;
        assert!(is_projective(&t2, &e).unwrap());
        assert!(is_max_projective(&t2, &e).unwrap());
        let m2 = Algebra::matrix_algebra(&f, 2).unwrap();
        let s = &m2.structure().unwrap().simples(Side::Right)[0].clone();
        assert!(is_max_projective(&m2, s).unwrap());
        let q = Algebra::triangular_algebra(&Rationals, 2).unwrap();
        let rq = regular(&q, Side::Right);
        assert!(matches!(is_max_projective(&q, &rq), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn normalized_vector_count() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(normalized_vectors(&f, 2).count(), 4);
    }
}
