// SPDX-License-Identifier: Apache-2.0

//! Named example algebras.
//!
//! | name | algebra |
//! |------|---------|
//! | `Tn:<n>`, `T2`, `T3` | upper triangular `n x n` matrices |
//! | `R4` | `(k x k)[x; swap]/(x^2)` on `e1, e2, e1x, e2x` |
//! | `A5` | the matrices `a(E11+E22+E33) + b E13 + c E14 + d E24 + e E44` in `M4` |
//! | `kxk` | `k x k` |
//! | `dual_numbers` | `k[x]/(x^2)` |
//! | `M2` | `2 x 2` matrices |
//! | `DxD` | `k[x]/(x^2) x k[x]/(x^2)` |

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub const NAMES: &[&str] = &["T2", "T3", "R4", "A5", "kxk", "dual_numbers", "M2", "DxD"];

pub fn zoo<F: Field>(name: &str, field: &F) -> Result<Algebra<F>> {
    let alg = match name {
        "R4" => r4(field)?,
        "A5" => a5(field)?,
        "kxk" => {
            let k = Algebra::truncated_poly(field, 1)?;
            k.product(&k)?.renamed("kxk")
        }
        "dual_numbers" => Algebra::truncated_poly(field, 2)?,
        "M2" => Algebra::matrix_algebra(field, 2)?,
        "DxD" => {
            let d = Algebra::truncated_poly(field, 2)?;
            d.product(&d)?.renamed("DxD")
        }
        _ => {
            let n = name
                .strip_prefix("Tn:")
                .or_else(|| name.strip_prefix('T'))
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::UnknownZoo(name.to_string()))?;
            Algebra::triangular_algebra(field, n)?
        }
    };
    Ok(alg)
}

/// Basis `e1, e2, e1x, e2x` with `x e1 = e2 x`, `x e2 = e1 x`, `x^2 = 0`.
fn r4<F: Field>(f: &F) -> Result<Algebra<F>> {
    let d = 4;
    let mut consts = vec![f.zero(); d * d * d];
    let mut set = |i: usize, j: usize, k: usize| consts[(i * d + j) * d + k] = f.one();
    for i in 0..2 {
        // e_i e_i = e_i, e_i (e_i x) = e_i x
        set(i, i, i);
        set(i, 2 + i, 2 + i);
        // (e_i x) e_j = e_i e_{j'} x, non-zero iff j != i
        set(2 + i, 1 - i, 2 + i);
    }
    let labels = ["e1", "e2", "e1x", "e2x"].map(String::from).to_vec();
    let unit = vec![f.one(), f.one(), f.zero(), f.zero()];
    Algebra::new(f, "R4", labels, consts, Some(unit))
}

fn a5<F: Field>(f: &F) -> Result<Algebra<F>> {
    let unit_at = |cells: &[(usize, usize)]| {
        let mut m = Matrix::zeros(f, 4, 4);
        for &(i, j) in cells {
            m.set(i, j, f.one());
        }
        m
    };
    let mats = [
        unit_at(&[(0, 0), (1, 1), (2, 2)]),
        unit_at(&[(0, 2)]),
        unit_at(&[(0, 3)]),
        unit_at(&[(1, 3)]),
        unit_at(&[(3, 3)]),
    ];
    let labels = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
    Algebra::from_matrix_basis(f, "A5", labels, &mats)
}
