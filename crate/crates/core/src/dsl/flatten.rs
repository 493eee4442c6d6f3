// SPDX-License-Identifier: Apache-2.0

use std::collections::{HashMap, VecDeque};

use super::parser::{compose, source, target};
use super::{Path, QuiverPresentation};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, EchelonBasis};

/// Maximum number of paths enumerated below the nilpotency bound.
pub const PATH_BUDGET: usize = 100_000;

fn path_len(p: &Path) -> usize {
    match p {
        Path::Trivial(_) => 0,
        Path::Arrows(a) => a.len(),
    }
}

fn path_label(q: &QuiverPresentation, p: &Path) -> String {
    match p {
        Path::Trivial(v) => format!("e{}", q.vertices[*v]),
        Path::Arrows(a) => a.iter().map(|&i| q.arrows[i].label.as_str()).collect::<Vec<_>>().join("."),
    }
}

/// Paths of length below the bound, by length and then arrow order.
fn enumerate_paths(q: &QuiverPresentation) -> Result<Vec<Path>> {
    let mut paths: Vec<Path> = (0..q.vertices.len()).map(Path::Trivial).collect();
    let mut layer: Vec<Path> = (0..q.arrows.len()).map(|a| Path::Arrows(vec![a])).collect();
    let mut len = 1;
    while len < q.nilpotency && !layer.is_empty() {
        if paths.len() + layer.len() > PATH_BUDGET {
            return Err(Error::IdealClosureOverflow(PATH_BUDGET));
        }
        paths.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for p in &layer {
            let Path::Arrows(a) = p else { unreachable!() };
            let end = q.arrows[*a.last().expect("non-empty")].target;
            for (i, arrow) in q.arrows.iter().enumerate() {
                if arrow.source == end {
                    let mut b = a.clone();
                    b.push(i);
                    next.push(Path::Arrows(b));
                }
            }
        }
        layer = next;
        len += 1;
    }
    Ok(paths)
}

/// Turns a quiver presentation into structure constants.
///
/// The basis consists of the paths that are not leading terms of the ideal,
/// with longer paths treated as larger. Products of paths that do not compose
/// or reach the nilpotency bound are zero.
pub fn flatten<F: Field>(q: &QuiverPresentation, field: &F) -> Result<Algebra<F>> {
    let paths = enumerate_paths(q)?;
    let n = paths.len();
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // column order: longest first, so pivots are the longest paths
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(path_len(&paths[i])), i));
    let mut col = vec![0; n];
    for (c, &i) in order.iter().enumerate() {
        col[i] = c;
    }

    let product = |a: usize, b: usize| -> Option<usize> {
        compose(&paths[a], &paths[b], &q.arrows).and_then(|p| index.get(&p).copied())
    };

    let mut generators = Vec::new();
    for rel in &q.relations {
        let mut ends = None;
        let mut v = vec![field.zero(); n];
        for (c, p) in rel {
            let e = (source(p, &q.arrows), target(p, &q.arrows));
            if *ends.get_or_insert(e) != e {
                return Err(Error::RelationNotParallel(
                    rel.iter().map(|(_, p)| path_label(q, p)).collect::<Vec<_>>().join(", "),
                ));
            }
            if let Some(&i) = index.get(p) {
                let c = field.from_rational(c)?;
                v[col[i]] = field.add(&v[col[i]], &c);
            }
        }
        generators.push(v);
    }

    // two-sided closure under multiplication by arrows
    let arrow_paths: Vec<usize> =
        (0..q.arrows.len()).filter_map(|a| index.get(&Path::Arrows(vec![a])).copied()).collect();
    let mut ideal = EchelonBasis::new(field, n);
    let mut queue: VecDeque<Vec<F::Elem>> = generators.into();
    while let Some(v) = queue.pop_front() {
        if !ideal.insert(&v) {
            continue;
        }
        for &a in &arrow_paths {
            for left in [true, false] {
                let mut w = vec![field.zero(); n];
                for i in 0..n {
                    let x = &v[col[i]];
                    if field.is_zero(x) {
                        continue;
                    }
                    let p = if left { product(a, i) } else { product(i, a) };
                    if let Some(p) = p {
                        w[col[p]] = field.add(&w[col[p]], x);
                    }
                }
                if !is_zero_vec(field, &w) {
                    queue.push_back(w);
                }
            }
        }
    }

    let mut basis: Vec<usize> = ideal.non_pivots().into_iter().map(|c| order[c]).collect();
    basis.sort_unstable();
    let d = basis.len();
    if d == 0 {
        return Err(Error::NotUnital);
    }
    let coords = |w: &[F::Elem]| -> Vec<F::Elem> {
        let r = ideal.reduce(w);
        basis.iter().map(|&i| r[col[i]].clone()).collect()
    };

    let mut consts = Vec::with_capacity(d * d * d);
    for &a in &basis {
        for &b in &basis {
            let mut w = vec![field.zero(); n];
            if let Some(p) = product(a, b) {
                w[col[p]] = field.one();
            }
            consts.extend(coords(&w));
        }
    }
    let mut one = vec![field.zero(); n];
    for v in 0..q.vertices.len() {
        one[col[v]] = field.one();
    }
    let unit = coords(&one);
    let labels = basis.iter().map(|&i| path_label(q, &paths[i])).collect();
    Algebra::new(field, q.name.clone(), labels, consts, Some(unit)).map_err(|e| match e {
        Error::InvalidAlgebra(_) => Error::NotUnital,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse, AlgebraDocument};
    use crate::field::{PrimeField, Rationals};
    use crate::zoo::zoo;

    fn quiver(src: &str) -> QuiverPresentation {
        match parse(src).unwrap() {
            AlgebraDocument::Quiver(q) => q,
            _ => panic!("quiver expected"),
        }
    }

    #[test]
    fn a2_path_algebra_is_triangular() {
        let q = quiver("quiver A2 over QQ { vertices 1, 2; arrow a: 1 -> 2; nilpotency 2; }");
        let alg = flatten(&q, &Rationals).unwrap();
        assert_eq!(alg.labels(), &["e1", "e2", "a"]);
        let t2 = zoo("T2", &Rationals).unwrap();
        assert_eq!(alg.dim(), t2.dim());
        assert_eq!(alg.structure().unwrap().radical().dim(), 1);
    }

    #[test]
    fn loop_truncation_gives_truncated_polynomials() {
        let q = quiver("quiver L over GF(7) { vertices v; arrow x: v -> v; nilpotency 3; }");
        let alg = flatten(&q, &PrimeField::new(7).unwrap()).unwrap();
        assert_eq!(alg.labels(), &["ev", "x", "x.x"]);
        assert!(alg.is_commutative());
    }

    #[test]
    fn commutativity_relation() {
        let q = quiver(
            "quiver C over QQ { vertices v; arrow x: v -> v; arrow y: v -> v; \
             relations x*y = y*x, x*x = 0, y*y = 0; nilpotency 3; }",
        );
        let alg = flatten(&q, &Rationals).unwrap();
        // 1, x, y, xy
        assert_eq!(alg.dim(), 4);
        assert!(alg.is_commutative());
    }

    #[test]
    fn non_parallel_relation_is_rejected() {
        let q = quiver(
            "quiver Q over QQ { vertices 1, 2; arrow a: 1 -> 2; arrow b: 2 -> 1; \
             relations a = b; nilpotency 2; }",
        );
        assert!(matches!(flatten(&q, &Rationals), Err(Error::RelationNotParallel(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let q = quiver(
            "quiver Big over QQ { vertices v; arrow a: v -> v; arrow b: v -> v; nilpotency 20; }",
        );
        assert_eq!(flatten(&q, &Rationals).unwrap_err(), Error::IdealClosureOverflow(PATH_BUDGET));
    }
}
