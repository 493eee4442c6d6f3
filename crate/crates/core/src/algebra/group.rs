// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

use super::Algebra;

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
}

impl GroupTable {
    /// `table[g][h]` is the index of `g h`. Checks closure, identity at 0,
    /// inverses, and associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidAction("group table must be a square table over 0..n".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let g = GroupTable { order: n, table: flat };
        for a in 0..n {
            if g.mul(0, a) != a || g.mul(a, 0) != a {
                return Err(Error::InvalidAction("element 0 is not the identity".into()));
            }
            if !(0..n).any(|b| g.mul(a, b) == 0) {
                return Err(Error::InvalidAction(format!("element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::InvalidAction("group table is not associative".into()));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(table).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }
}

/// A group acting on an algebra by automorphisms.
///
/// Element `g` acts on coordinate rows as `x -> x * images[g]`, so the
/// homomorphism law reads `images[g h] = images[h] * images[g]`.
#[derive(Debug, Clone)]
pub struct GroupAction<F: Field> {
    group: GroupTable,
    images: Vec<Matrix<F>>,
}

impl<F: Field> GroupAction<F> {
    pub fn new(alg: &Algebra<F>, group: GroupTable, images: Vec<Matrix<F>>) -> Result<Self> {
        let d = alg.dim();
        if images.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} images for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        for (g, m) in images.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(Error::InvalidAction(format!("image of g{g} is not {d}x{d}")));
            }
            check_automorphism(alg, m).map_err(|e| Error::InvalidAction(format!("g{g}: {e}")))?;
        }
        if images[0] != Matrix::identity(alg.field(), d) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let composed = images[h].mul(&images[g])?;
                if composed != images[group.mul(g, h)] {
                    return Err(Error::InvalidAction(format!(
                        "action of g{g} g{h} is not the composite action"
                    )));
                }
            }
        }
        Ok(GroupAction { group, images })
    }

    /// The cyclic group generated by `sigma`, which must have exactly `order`
    /// as a multiple of its order.
    pub fn cyclic(alg: &Algebra<F>, sigma: Matrix<F>, order: usize) -> Result<Self> {
        let f = alg.field();
        let mut images = vec![Matrix::identity(f, alg.dim())];
        for k in 1..order {
            let next = images[k - 1].mul(&sigma)?;
            images.push(next);
        }
        if images[order - 1].mul(&sigma)? != Matrix::identity(f, alg.dim()) {
            return Err(Error::InvalidAction(format!("generator does not have order dividing {order}")));
        }
        Self::new(alg, GroupTable::cyclic(order), images)
    }

    /// The order-2 action exchanging the two halves of the basis,
    /// `b_i <-> b_{i+m}` for an algebra of dimension `2m`.
    pub fn swap(alg: &Algebra<F>) -> Result<Self> {
        let d = alg.dim();
        if !d.is_multiple_of(2) {
            return Err(Error::InvalidAction("swap needs an even-dimensional algebra".into()));
        }
        let m = d / 2;
        let f = alg.field();
        let mut sigma = Matrix::zeros(f, d, d);
        for i in 0..m {
            sigma.set(i, i + m, f.one());
            sigma.set(i + m, i, f.one());
        }
        Self::cyclic(alg, sigma, 2)
    }

    pub fn trivial(alg: &Algebra<F>, group: GroupTable) -> Result<Self> {
        let images = vec![Matrix::identity(alg.field(), alg.dim()); group.order()];
        Self::new(alg, group, images)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn image(&self, g: usize) -> &Matrix<F> {
        &self.images[g]
    }

    pub fn images(&self) -> &[Matrix<F>] {
        &self.images
    }
}

fn check_automorphism<F: Field>(alg: &Algebra<F>, m: &Matrix<F>) -> Result<()> {
    if m.inverse().is_none() {
        return Err(Error::InvalidAction("map is not invertible".into()));
    }
    if m.vec_mul(alg.unit()) != alg.unit() {
        return Err(Error::InvalidAction("map does not fix the unit".into()));
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = m.vec_mul(alg.basis_product(i, j));
            let rhs = alg.mul(m.row(i), m.row(j));
            if lhs != rhs {
                return Err(Error::InvalidAction(format!(
                    "map is not multiplicative on ({}, {})",
                    alg.labels()[i],
                    alg.labels()[j]
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn rejects_non_group() {
        assert!(GroupTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert_eq!(GroupTable::cyclic(3).mul(2, 2), 1);
    }

    #[test]
    fn swap_on_non_product_is_rejected() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let k = Algebra::truncated_poly(&q, 1).unwrap();
        let t2k = t2.product(&k).unwrap();
        assert!(matches!(GroupAction::swap(&t2k), Err(Error::InvalidAction(_))));
        let d = Algebra::truncated_poly(&q, 2).unwrap();
        let dd = d.product(&d).unwrap();
        assert!(GroupAction::swap(&dd).is_ok());
    }
}
