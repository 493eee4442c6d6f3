// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

use super::{axpy, is_zero_vec};

/// Dense row-major matrix over an exact field.
///
/// Vectors are rows throughout the crate: a matrix `m` acts on a coordinate
/// row `v` as `v * m`.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` is needed to give empty row lists a shape.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix { field: field.clone(), rows: n, cols, data })
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                axpy(f, dst, a, other.row(k));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { data, ..self.clone_shape() }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &F::Elem, other: &Self) -> Result<()> {
        self.check_same_shape(other)?;
        if self.field.is_zero(c) {
            return Ok(());
        }
        axpy(&self.field, &mut self.data, c, &other.data);
        Ok(())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows, "vector length does not match matrix rows");
        let mut out = vec![self.field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if !self.field.is_zero(a) {
                axpy(&self.field, &mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn vstack(field: &F, cols: usize, parts: &[&Self]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::DimensionMismatch("vstack column counts differ".into()));
            }
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn hstack(field: &F, rows: usize, parts: &[&Self]) -> Result<Self> {
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for p in parts {
            if p.rows != rows {
                return Err(Error::DimensionMismatch("hstack row counts differ".into()));
            }
            for i in 0..rows {
                out.row_mut(i)[off..off + p.cols].clone_from_slice(p.row(i));
            }
            off += p.cols;
        }
        Ok(out)
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diag(field: &F, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                out.row_mut(r0 + i)[c0..c0 + b.cols].clone_from_slice(b.row(i));
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    /// Columns `start..start + width` as a new matrix.
    pub fn block_cols(&self, start: usize, width: usize) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.rows * width);
        for i in 0..self.rows {
            data.extend_from_slice(&self.row(i)[start..start + width]);
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: width, data }
    }

    /// Reduced row-echelon form with deterministic first-non-zero pivoting.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is non-zero");
            for x in m.row_mut(r) {
                *x = f.mul(x, &inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let neg = f.neg(&factor);
                axpy(f, m.row_mut(i), &neg, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of the right null space `{v : self * v^T = 0}`.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(k, free));
            }
            basis.push(v);
        }
        Matrix::from_rows(f, self.cols, basis).expect("kernel rows have matching length")
    }

    /// Basis (as rows) of `{x : x * self = 0}`.
    pub fn left_kernel_basis(&self) -> Self {
        self.transpose().kernel_basis()
    }

    /// Basis of the row space, in reduced echelon form.
    pub fn row_space(&self) -> Self {
        let r = self.rref();
        r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>())
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let id = Self::identity(&self.field, self.rows);
        solve(self, &id).ok().flatten()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn clone_shape(&self) -> Self {
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data: Vec::new() }
    }
}

/// Some `X` with `a * X = b`, or `None` when the system is inconsistent.
///
/// Free variables are set to zero, so the returned solution is the
/// lexicographically first one with respect to the pivot structure of `a`.
pub fn solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Option<Matrix<F>>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: a has {} rows, b has {}",
            a.rows(),
            b.rows()
        )));
    }
    let f = a.field();
    let aug = Matrix::hstack(f, a.rows(), &[a, b])?;
    let r = aug.rref();
    if r.pivots.iter().any(|&p| p >= a.cols()) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(f, a.cols(), b.cols());
    for (k, &pc) in r.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(pc, j, r.matrix.get(k, a.cols() + j).clone());
        }
    }
    debug_assert!(a.mul(&x)? == *b, "solution failed re-multiplication");
    if a.mul(&x)? != *b {
        return Err(Error::InvariantViolation("solve produced a non-solution".into()));
    }
    Ok(Some(x))
}

/// Basis of `rowspace(a) + rowspace(b)`.
pub fn sum_rowspaces<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch("sum of row spaces".into()));
    }
    Ok(Matrix::vstack(a.field(), a.cols(), &[a, b])?.row_space())
}

/// Basis of `rowspace(a) ∩ rowspace(b)`.
pub fn intersect_rowspaces<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch("intersection of row spaces".into()));
    }
    let f = a.field();
    let ba = a.row_space();
    let bb = b.row_space();
    let stacked = Matrix::vstack(f, a.cols(), &[&ba, &bb])?;
    let rel = stacked.left_kernel_basis();
    let mut vecs = Vec::with_capacity(rel.rows());
    for i in 0..rel.rows() {
        let coeffs = &rel.row(i)[..ba.rows()];
        vecs.push(ba.vec_mul(coeffs));
    }
    Ok(Matrix::from_rows(f, a.cols(), vecs)?.row_space())
}

/// Whether `v` lies in the row space of `a`.
pub fn subspace_contains<F: Field>(a: &Matrix<F>, v: &[F::Elem]) -> Result<bool> {
    if a.cols() != v.len() {
        return Err(Error::DimensionMismatch("membership test".into()));
    }
    if is_zero_vec(a.field(), v) {
        return Ok(true);
    }
    let vm = Matrix::from_rows(a.field(), a.cols(), vec![v.to_vec()])?;
    Ok(Matrix::vstack(a.field(), a.cols(), &[a, &vm])?.rank() == a.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rref_of_identity_is_identity() {
        let f = PrimeField::new(7).unwrap();
        let id = Matrix::identity(&f, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_rank_one_rational() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_of_zero_matrix() {
        let q = Rationals;
        let z = Matrix::zeros(&q, 2, 5);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn kernel_examples() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(Matrix::identity(&f, 4).kernel_basis().rows(), 0);
        let k = Matrix::from_i64(&f, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.rows(), 1);
        // proportional to (1, 4)
        let v = k.row(0);
        let scale = f.inv(&v[0]).unwrap();
        assert_eq!(vec![f.mul(&v[0], &scale), f.mul(&v[1], &scale)], vec![1, 4]);
        assert_eq!(Matrix::zeros(&f, 2, 3).kernel_basis().rows(), 3);
    }

    #[test]
    fn solve_examples() {
        let q = Rationals;
        let b = Matrix::from_i64(&q, &[&[3, -1], &[7, 2]]);
        assert_eq!(solve(&Matrix::identity(&q, 2), &b).unwrap(), Some(b.clone()));

        let a = Matrix::from_i64(&q, &[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &Matrix::from_i64(&q, &[&[1], &[3]])).unwrap(), None);
        let x = solve(&a, &Matrix::from_i64(&q, &[&[1], &[2]])).unwrap().unwrap();
        assert_eq!(q.add(x.get(0, 0), x.get(1, 0)), q.one());

        let bad = Matrix::from_i64(&q, &[&[1]]);
        assert!(matches!(solve(&a, &bad), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn rowspace_lattice_examples() {
        let f = PrimeField::new(3).unwrap();
        let e1 = Matrix::from_i64(&f, &[&[1, 0]]);
        let e2 = Matrix::from_i64(&f, &[&[0, 1]]);
        assert_eq!(intersect_rowspaces(&e1, &e2).unwrap().rows(), 0);
        assert_eq!(intersect_rowspaces(&e1, &e1).unwrap(), e1.row_space());
        assert_eq!(sum_rowspaces(&e1, &e1).unwrap(), e1.row_space());

        let q = Rationals;
        let plane = Matrix::identity(&q, 2);
        let diag = Matrix::from_i64(&q, &[&[1, 1]]);
        let meet = intersect_rowspaces(&plane, &diag).unwrap();
        assert_eq!(meet, diag);
        assert!(subspace_contains(&meet, &[q.from_i64(3), q.from_i64(3)]).unwrap());
        assert!(!subspace_contains(&meet, &[q.from_i64(1), q.from_i64(0)]).unwrap());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        let m = Matrix::from_i64(&f, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, 2));
        assert!(Matrix::from_i64(&f, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
