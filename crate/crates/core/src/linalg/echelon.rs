// SPDX-License-Identifier: Apache-2.0

use crate::field::Field;

use super::{axpy, Matrix};

/// A subspace of `F^n` kept as a fully reduced echelon basis that can grow
/// one vector at a time.
///
/// Every stored row has a 1 in its pivot column and every other row has a 0
/// there, so the coordinates of a member vector are its pivot entries.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    len: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: &F, len: usize) -> Self {
        EchelonBasis { field: field.clone(), len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let mut e = Self::new(m.field(), m.cols());
        for i in 0..m.rows() {
            e.insert(m.row(i));
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&w[p]) {
                let c = f.neg(&w[p]);
                axpy(f, &mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of a member vector relative to the stored rows.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]).expect("non-zero pivot");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = f.neg(&row[p]);
                axpy(&f, row, &c, &w);
            }
        }
        // keep rows ordered by pivot column
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }

    /// Columns that are not pivots; their standard vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.len).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(&self.field, self.len, self.rows.clone()).expect("consistent row length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn incremental_insert_matches_rref() {
        let f = PrimeField::new(11).unwrap();
        let m = Matrix::from_i64(&f, &[&[0, 2, 4, 1], &[3, 1, 0, 0], &[3, 3, 4, 1], &[1, 0, 0, 5]]);
        let e = EchelonBasis::from_matrix(&m);
        assert_eq!(e.dim(), m.rank());
        assert_eq!(e.to_matrix(), m.row_space());
        assert!(e.contains(m.row(2)));
        let coords = e.coordinates(m.row(2)).unwrap();
        let rebuilt = e.to_matrix().vec_mul(&coords);
        assert_eq!(rebuilt, m.row(2).to_vec());
    }
}
