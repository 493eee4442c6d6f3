// SPDX-License-Identifier: Apache-2.0

//! Exact dense linear algebra over [`Field`] implementations.

mod echelon;
mod matrix;
pub mod poly;

pub use echelon::EchelonBasis;
pub use matrix::{intersect_rowspaces, solve, subspace_contains, sum_rowspaces, Matrix, Rref};

use crate::error::Result;
use crate::field::Field;

/// `y += a * x`
pub fn axpy<F: Field>(f: &F, y: &mut [F::Elem], a: &F::Elem, x: &[F::Elem]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        if !f.is_zero(xi) {
            f.mul_add_assign(yi, a, xi);
        }
    }
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn scale_vec<F: Field>(f: &F, v: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    v.iter().map(|x| f.mul(x, c)).collect()
}

pub fn add_vec<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn sub_vec<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Roots of a polynomial (coefficients low degree first) that lie in the field.
pub fn factor_linear_roots<F: Field>(f: &F, poly: &[F::Elem]) -> Result<Vec<F::Elem>> {
    f.linear_roots(poly)
}
