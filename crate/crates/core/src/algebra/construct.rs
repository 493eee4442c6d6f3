// SPDX-License-Identifier: Apache-2.0

//! Constructors for the algebras used as examples and test subjects.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{solve, EchelonBasis, Matrix};

use super::{Algebra, GroupAction, GroupTable};

/// An `(A, A)`-bimodule: `b . m = m * left[b]` and `m . b = m * right[b]`
/// for each basis element `b` of `A`.
#[derive(Debug, Clone)]
pub struct Bimodule<F: Field> {
    pub labels: Vec<String>,
    pub left: Vec<Matrix<F>>,
    pub right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(
        alg: &Algebra<F>,
        labels: Vec<String>,
        left: Vec<Matrix<F>>,
        right: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let n = labels.len();
        if left.len() != alg.dim() || right.len() != alg.dim() {
            return Err(Error::DimensionMismatch("one action matrix per basis element".into()));
        }
        if left.iter().chain(&right).any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {n}x{n}")));
        }
        Ok(Bimodule { labels, left, right })
    }

    /// `A` acting on itself from both sides.
    pub fn regular(alg: &Algebra<F>) -> Result<Self> {
        let labels = alg.labels().iter().map(|l| format!("m_{l}")).collect();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..alg.dim() {
            let b = alg.basis_element(i);
            left.push(alg.left_mult_matrix(&b)?);
            right.push(alg.right_mult_matrix(&b)?);
        }
        Self::new(alg, labels, left, right)
    }

    /// The linear dual `Hom_k(A, k)` with `(a f)(m) = f(m a)` and `(f a)(m) = f(a m)`.
    pub fn dual(alg: &Algebra<F>) -> Result<Self> {
        let labels = alg.labels().iter().map(|l| format!("d_{l}")).collect();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..alg.dim() {
            let b = alg.basis_element(i);
            left.push(alg.right_mult_matrix(&b)?.transpose());
            right.push(alg.left_mult_matrix(&b)?.transpose());
        }
        Self::new(alg, labels, left, right)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// Structure constants of the span of `vectors` under `product`, which must
/// be closed. Coordinates are solved against the given (independent) vectors.
fn constants_on_span<F: Field>(
    field: &F,
    vectors: &[Vec<F::Elem>],
    product: impl Fn(&[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
    unit: &[F::Elem],
) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
    let k = vectors.len();
    let len = unit.len();
    let basis = Matrix::from_rows(field, len, vectors.to_vec())?;
    if basis.rank() != k {
        return Err(Error::InvalidAlgebra("spanning vectors are dependent".into()));
    }
    let mut cols = Vec::with_capacity(k * k + 1);
    for x in vectors {
        for y in vectors {
            cols.push(product(x, y));
        }
    }
    cols.push(unit.to_vec());
    let rhs = Matrix::from_rows(field, len, cols)?.transpose();
    let x = solve(&basis.transpose(), &rhs)?.ok_or_else(|| {
        Error::InvalidAlgebra("span is not closed under multiplication or misses the unit".into())
    })?;
    let xt = x.transpose();
    let mut consts = Vec::with_capacity(k * k * k);
    for idx in 0..k * k {
        consts.extend_from_slice(xt.row(idx));
    }
    Ok((consts, xt.row(k * k).to_vec()))
}

fn matrix_unit_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("E{i}{j}")
    } else {
        format!("E{i}_{j}")
    }
}

impl<F: Field> Algebra<F> {
    /// The algebra spanned by the given `n x n` matrices, which must be
    /// independent, closed under products, and contain the identity in their span.
    pub fn from_matrix_basis(
        field: &F,
        name: impl Into<String>,
        labels: Vec<String>,
        mats: &[Matrix<F>],
    ) -> Result<Self> {
        let n = mats.first().map_or(0, |m| m.rows());
        if mats.len() != labels.len() || mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("matrix basis shapes".into()));
        }
        let vecs: Vec<Vec<F::Elem>> = mats.iter().map(|m| m.data().to_vec()).collect();
        let product = |x: &[F::Elem], y: &[F::Elem]| {
            let a = Matrix::from_vec(field, n, n, x.to_vec()).expect("square");
            let b = Matrix::from_vec(field, n, n, y.to_vec()).expect("square");
            a.mul(&b).expect("square").data().to_vec()
        };
        let id = Matrix::identity(field, n);
        let (consts, unit) = match constants_on_span(field, &vecs, product, id.data()) {
            Ok(x) => x,
            Err(Error::InvalidAlgebra(msg)) if msg.contains("misses the unit") => {
                return Err(Error::NonUnitalResult)
            }
            Err(e) => return Err(e),
        };
        Algebra::new(field, name, labels, consts, Some(unit))
    }

    /// Full matrix algebra `M_n(k)` on the matrix units, row-major.
    pub fn matrix_algebra(field: &F, n: usize) -> Result<Self> {
        let d = n * n;
        let mut consts = vec![field.zero(); d * d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // E_ij E_jl = E_il
                    let a = i * n + j;
                    let b = j * n + l;
                    consts[(a * d + b) * d + i * n + l] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |j| matrix_unit_label(i + 1, j + 1, n)))
            .collect();
        Algebra::new(field, format!("M{n}"), labels, consts, Some(unit))
    }

    /// Upper triangular `n x n` matrices on the matrix units `E_ij`, `i <= j`.
    pub fn triangular_algebra(field: &F, n: usize) -> Result<Self> {
        let units: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let d = units.len();
        let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j));
        let mut consts = vec![field.zero(); d * d * d];
        for (a, &(i, j)) in units.iter().enumerate() {
            for (b, &(k, l)) in units.iter().enumerate() {
                if j == k {
                    let c = index(i, l).expect("upper triangular product");
                    consts[(a * d + b) * d + c] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        for i in 0..n {
            unit[index(i, i).expect("diagonal")] = field.one();
        }
        let labels = units.iter().map(|&(i, j)| matrix_unit_label(i + 1, j + 1, n)).collect();
        Algebra::new(field, format!("T{n}"), labels, consts, Some(unit))
    }

    /// `k[x]/(x^n)` on the basis `1, x, ..., x^(n-1)` labelled `e, x, x^2, ...`.
    pub fn truncated_poly(field: &F, n: usize) -> Result<Self> {
        let mut consts = vec![field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    consts[(i * n + j) * n + i + j] = field.one();
                }
            }
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let name = if n == 2 { "dual_numbers".to_string() } else { format!("k[x]/(x^{n})") };
        let mut unit = vec![field.zero(); n];
        if n > 0 {
            unit[0] = field.one();
        }
        Algebra::new(field, name, labels, consts, Some(unit))
    }

    /// Direct product `A x B` with unit `(1_A, 1_B)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let f = &self.field;
        let (da, db) = (self.dim, other.dim);
        let d = da + db;
        let mut consts = vec![f.zero(); d * d * d];
        for i in 0..da {
            for j in 0..da {
                let dst = (i * d + j) * d;
                consts[dst..dst + da].clone_from_slice(self.basis_product(i, j));
            }
        }
        for i in 0..db {
            for j in 0..db {
                let dst = ((da + i) * d + da + j) * d + da;
                consts[dst..dst + db].clone_from_slice(other.basis_product(i, j));
            }
        }
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}_1"))
            .chain(other.labels.iter().map(|l| format!("{l}_2")))
            .collect();
        Algebra::new(f, format!("{}x{}", self.name, other.name), labels, consts, Some(unit))
    }

    /// The opposite algebra: same basis, `b_i * b_j` replaced by `b_j * b_i`.
    pub fn opposite(&self) -> Result<Self> {
        let d = self.dim;
        let mut consts = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                consts.extend_from_slice(self.basis_product(j, i));
            }
        }
        let name = match self.name.strip_suffix("op") {
            Some(base) => base.to_string(),
            None => format!("{}op", self.name),
        };
        Algebra::new(&self.field, name, self.labels.clone(), consts, Some(self.unit.clone()))
    }

    /// Group algebra `kG` on the basis `g0, g1, ...` (`g0` the identity).
    pub fn group_algebra(field: &F, group: &GroupTable) -> Result<Self> {
        let n = group.order();
        let mut consts = vec![field.zero(); n * n * n];
        for g in 0..n {
            for h in 0..n {
                consts[(g * n + h) * n + group.mul(g, h)] = field.one();
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        let labels = (0..n).map(|g| format!("g{g}")).collect();
        Algebra::new(field, format!("kG{n}"), labels, consts, Some(unit))
    }

    /// Skew group algebra `A * G` with `(a g)(b h) = a (g . b) (g h)`.
    /// Basis element `b_i g` has index `g * dim + i`.
    pub fn skew_group_algebra(&self, action: &GroupAction<F>) -> Result<Self> {
        let f = &self.field;
        let da = self.dim;
        let n = action.group().order();
        let d = da * n;
        let mut consts = vec![f.zero(); d * d * d];
        for g in 0..n {
            let sigma = action.image(g);
            for h in 0..n {
                let gh = action.group().mul(g, h);
                for j in 0..da {
                    let moved = sigma.row(j);
                    for i in 0..da {
                        let prod = self.mul(&self.basis_element(i), moved);
                        let dst = ((g * da + i) * d + h * da + j) * d + gh * da;
                        consts[dst..dst + da].clone_from_slice(&prod);
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); d];
        unit[..da].clone_from_slice(&self.unit);
        let labels = (0..n)
            .flat_map(|g| self.labels.iter().map(move |l| format!("{l}_g{g}")))
            .collect();
        Algebra::new(f, format!("{}*G{n}", self.name), labels, consts, Some(unit))
    }

    /// The subalgebra spanned by independent `vectors` (which must be closed
    /// under multiplication and contain the unit in their span).
    pub fn subalgebra(
        &self,
        name: impl Into<String>,
        labels: Vec<String>,
        vectors: &[Vec<F::Elem>],
    ) -> Result<Self> {
        let (consts, unit) =
            match constants_on_span(&self.field, vectors, |x, y| self.mul(x, y), &self.unit) {
                Ok(x) => x,
                Err(Error::InvalidAlgebra(msg)) if msg.contains("misses the unit") => {
                    return Err(Error::InvalidAlgebra(format!("not a unital subalgebra: {msg}")))
                }
                Err(e) => return Err(e),
            };
        Algebra::new(&self.field, name, labels, consts, Some(unit))
    }

    /// Fixed ring `A^G = {a : g . a = a for all g}`.
    pub fn fixed_ring(&self, action: &GroupAction<F>) -> Result<Self> {
        let f = &self.field;
        let d = self.dim;
        let id = Matrix::identity(f, d);
        let diffs: Vec<Matrix<F>> =
            action.images().iter().map(|m| m.sub(&id)).collect::<Result<_>>()?;
        let refs: Vec<&Matrix<F>> = diffs.iter().collect();
        let fixed = Matrix::hstack(f, d, &refs)?.left_kernel_basis().row_space();
        let vectors = fixed.row_vecs();
        let labels = vectors
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let support: Vec<usize> = (0..d).filter(|&i| !f.is_zero(&v[i])).collect();
                match support.as_slice() {
                    [i] if f.is_one(&v[*i]) => self.labels[*i].clone(),
                    _ => format!("f{}", k + 1),
                }
            })
            .collect();
        self.subalgebra(format!("{}^G", self.name), labels, &vectors)
    }

    /// Trivial extension `A ⋉ M`: `(a, m)(a', m') = (a a', a m' + m a')`.
    pub fn trivial_extension(&self, m: &Bimodule<F>) -> Result<Self> {
        let f = &self.field;
        let da = self.dim;
        let dm = m.dim();
        if m.left.len() != da {
            return Err(Error::DimensionMismatch("bimodule does not match the algebra".into()));
        }
        let d = da + dm;
        let mut consts = vec![f.zero(); d * d * d];
        for i in 0..da {
            for j in 0..da {
                let dst = (i * d + j) * d;
                consts[dst..dst + da].clone_from_slice(self.basis_product(i, j));
            }
            for j in 0..dm {
                // b_i . m_j
                let dst = (i * d + da + j) * d + da;
                consts[dst..dst + dm].clone_from_slice(m.left[i].row(j));
                // m_j . b_i
                let dst = ((da + j) * d + i) * d + da;
                consts[dst..dst + dm].clone_from_slice(m.right[i].row(j));
            }
        }
        let mut unit = self.unit.clone();
        unit.extend(std::iter::repeat_n(f.zero(), dm));
        let mut labels = self.labels.clone();
        labels.extend(m.labels.iter().cloned());
        Algebra::new(f, format!("{}_triv", self.name), labels, consts, Some(unit))
    }

    /// Quotient `A / I` for a two-sided ideal spanned by the rows of `ideal`.
    /// The basis is the set of basis elements outside the pivot columns.
    pub fn quotient_by_ideal(&self, ideal: &Matrix<F>) -> Result<Self> {
        let f = &self.field;
        if ideal.cols() != self.dim {
            return Err(Error::DimensionMismatch("ideal basis length".into()));
        }
        let span = EchelonBasis::from_matrix(ideal);
        for v in span.rows() {
            for t in 0..self.dim {
                let b = self.basis_element(t);
                if !span.contains(&self.mul(v, &b)) || !span.contains(&self.mul(&b, v)) {
                    return Err(Error::NotAnIdeal(format!(
                        "product with {} leaves the span",
                        self.labels[t]
                    )));
                }
            }
        }
        let keep = span.non_pivots();
        if keep.is_empty() {
            return Err(Error::NonUnitalResult);
        }
        let k = keep.len();
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = span.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut consts = Vec::with_capacity(k * k * k);
        for &a in &keep {
            for &b in &keep {
                consts.extend(project(self.basis_product(a, b)));
            }
        }
        let unit = project(&self.unit);
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let _ = f;
        Algebra::new(&self.field, format!("{}/I", self.name), labels, consts, Some(unit))
    }

    /// `M_n(A)` on the basis `E_pq ⊗ b_i`, index `(p n + q) dim + i`.
    pub fn matrix_amplification(&self, n: usize) -> Result<Self> {
        let f = &self.field;
        let da = self.dim;
        let d = n * n * da;
        let mut consts = vec![f.zero(); d * d * d];
        for p in 0..n {
            for q in 0..n {
                for s in 0..n {
                    for i in 0..da {
                        for j in 0..da {
                            let a = (p * n + q) * da + i;
                            let b = (q * n + s) * da + j;
                            let dst = (a * d + b) * d + (p * n + s) * da;
                            consts[dst..dst + da].clone_from_slice(self.basis_product(i, j));
                        }
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); d];
        for p in 0..n {
            let off = (p * n + p) * da;
            unit[off..off + da].clone_from_slice(&self.unit);
        }
        let labels = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .flat_map(|(p, q)| self.labels.iter().map(move |l| format!("{l}_{}{}", p + 1, q + 1)))
            .collect();
        Algebra::new(f, format!("M{n}({})", self.name), labels, consts, Some(unit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn constructor_dimensions() {
        let q = Rationals;
        assert_eq!(Algebra::matrix_algebra(&q, 3).unwrap().dim(), 9);
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        assert_eq!(t2.dim(), 3);
        assert_eq!(t2.labels(), &["E11", "E12", "E22"]);
        assert_eq!(Algebra::triangular_algebra(&q, 3).unwrap().dim(), 6);
        assert_eq!(Algebra::truncated_poly(&q, 4).unwrap().dim(), 4);
        let p = t2.product(&Algebra::truncated_poly(&q, 2).unwrap()).unwrap();
        assert_eq!(p.dim(), 5);
    }

    #[test]
    fn skew_group_of_dxd_has_dimension_eight() {
        let q = Rationals;
        let d = Algebra::truncated_poly(&q, 2).unwrap();
        let dd = d.product(&d).unwrap();
        let swap = GroupAction::swap(&dd).unwrap();
        let skew = dd.skew_group_algebra(&swap).unwrap();
        assert_eq!(skew.dim(), 8);
        assert!(skew.validate().is_valid());
        let fixed = dd.fixed_ring(&swap).unwrap();
        assert_eq!(fixed.dim(), 2);
        assert!(fixed.is_commutative());
    }

    #[test]
    fn trivial_extension_of_field_is_dual_numbers() {
        let q = Rationals;
        let k = Algebra::truncated_poly(&q, 1).unwrap();
        let m = Bimodule::regular(&k).unwrap();
        let te = k.trivial_extension(&m).unwrap();
        let dn = Algebra::truncated_poly(&q, 2).unwrap();
        assert_eq!(te.dim(), 2);
        assert_eq!(te.structure_constants(), dn.structure_constants());
        assert_eq!(te.unit(), dn.unit());
    }

    #[test]
    fn trivial_extension_by_dual_bimodule_is_valid() {
        let f = PrimeField::new(101).unwrap();
        let t2 = Algebra::triangular_algebra(&f, 2).unwrap();
        let te = t2.trivial_extension(&Bimodule::dual(&t2).unwrap()).unwrap();
        assert_eq!(te.dim(), 6);
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = Rationals;
        let t3 = Algebra::triangular_algebra(&q, 3).unwrap();
        let back = t3.opposite().unwrap().opposite().unwrap();
        assert_eq!(back.structure_constants(), t3.structure_constants());
        assert_eq!(back.name(), t3.name());
    }

    #[test]
    fn product_unit_and_commutativity() {
        let q = Rationals;
        let d = Algebra::truncated_poly(&q, 2).unwrap();
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let dd = d.product(&d).unwrap();
        assert!(dd.is_commutative());
        assert!(!d.product(&t2).unwrap().is_commutative());
        let mut expected = d.unit().to_vec();
        expected.extend_from_slice(t2.unit());
        assert_eq!(d.product(&t2).unwrap().unit(), expected.as_slice());
    }

    #[test]
    fn group_algebra_matches_trivial_skew_group() {
        let f = PrimeField::new(5).unwrap();
        let g = GroupTable::cyclic(3);
        let kg = Algebra::group_algebra(&f, &g).unwrap();
        let k = Algebra::truncated_poly(&f, 1).unwrap();
        let skew = k.skew_group_algebra(&GroupAction::trivial(&k, g).unwrap()).unwrap();
        assert_eq!(kg.structure_constants(), skew.structure_constants());
        assert_eq!(kg.unit(), skew.unit());
    }

    #[test]
    fn quotient_by_radical_of_triangular() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let j = Matrix::from_rows(&q, 3, vec![t2.basis_element(1)]).unwrap();
        let quo = t2.quotient_by_ideal(&j).unwrap();
        assert_eq!(quo.dim(), 2);
        assert!(quo.is_commutative());
        let not_ideal = Matrix::from_rows(&q, 3, vec![t2.basis_element(0)]).unwrap();
        assert!(matches!(t2.quotient_by_ideal(&not_ideal), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn matrix_basis_without_identity_is_non_unital() {
        let q = Rationals;
        let e11 = Matrix::from_i64(&q, &[&[1, 0], &[0, 0]]);
        let e12 = Matrix::from_i64(&q, &[&[0, 1], &[0, 0]]);
        let r = Algebra::from_matrix_basis(&q, "x", vec!["a".into(), "b".into()], &[e11, e12]);
        assert_eq!(r.unwrap_err(), Error::NonUnitalResult);
    }

    #[test]
    fn amplification_dimension() {
        let q = Rationals;
        let d = Algebra::truncated_poly(&q, 2).unwrap();
        let m2d = d.matrix_amplification(2).unwrap();
        assert_eq!(m2d.dim(), 8);
        assert!(!m2d.is_commutative());
    }
}
