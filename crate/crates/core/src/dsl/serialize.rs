// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write;

use super::lexer::is_identifier;
use crate::algebra::Algebra;
use crate::field::Field;

fn symbol(s: &str) -> String {
    if is_identifier(s) && !matches!(s, "algebra" | "quiver" | "over" | "basis" | "unit" | "mult") {
        s.to_string()
    } else {
        format!("{s:?}")
    }
}

fn linear<F: Field>(f: &F, labels: &[String], v: &[F::Elem]) -> String {
    let mut out = String::new();
    for (x, label) in v.iter().zip(labels) {
        if f.is_zero(x) {
            continue;
        }
        let neg = f.is_negative(x);
        let mag = if neg { f.neg(x) } else { x.clone() };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if !f.is_one(&mag) {
            let _ = write!(out, "{}*", f.format(&mag));
        }
        out.push_str(&symbol(label));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical structure-constant text. Zero products are omitted, so two
/// algebras with equal constants, labels and name serialize identically.
pub fn serialize<F: Field>(alg: &Algebra<F>) -> String {
    let f = alg.field();
    let labels = alg.labels();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} over {} {{", symbol(alg.name()), f.spec());
    let basis: Vec<String> = labels.iter().map(|l| symbol(l)).collect();
    let _ = writeln!(out, "  basis {};", basis.join(", "));
    let _ = writeln!(out, "  unit = {};", linear(f, labels, alg.unit()));
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let p = alg.basis_product(i, j);
            if p.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let _ = writeln!(
                out,
                "  mult {}*{} = {};",
                basis[i],
                basis[j],
                linear(f, labels, p)
            );
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::field::{PrimeField, Rationals};
    use crate::zoo::{zoo, NAMES};

    #[test]
    fn matrix_algebra_has_eight_nonzero_products() {
        let f = PrimeField::new(7).unwrap();
        let m2 = Algebra::matrix_algebra(&f, 2).unwrap();
        let text = serialize(&m2);
        assert_eq!(text.matches("mult ").count(), 8);
        assert!(text.starts_with("algebra M2 over GF(7) {"));
    }

    #[test]
    fn zoo_round_trips() {
        for name in NAMES {
            let alg = zoo(name, &Rationals).unwrap();
            let text = serialize(&alg);
            let back = parse(&text).unwrap().build(&Rationals).unwrap();
            assert!(back.structurally_eq(&alg), "{name}");
            assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn awkward_names_are_quoted() {
        let alg = Algebra::truncated_poly(&Rationals, 3).unwrap();
        let text = serialize(&alg);
        assert!(text.starts_with("algebra \"k[x]/(x^3)\" over QQ"));
        assert!(parse(&text).is_ok());
    }

    #[test]
    fn negative_and_fractional_coefficients() {
        let q = Rationals;
        let f = |n: i64, d: i64| num_rational::BigRational::new(n.into(), d.into());
        let labels = vec!["a".to_string(), "b".to_string()];
        assert_eq!(linear(&q, &labels, &[f(-1, 2), f(3, 1)]), "-1/2*a + 3*b");
        assert_eq!(linear(&q, &labels, &[f(1, 1), f(-1, 1)]), "a - b");
        assert_eq!(linear(&q, &labels, &[f(0, 1), f(0, 1)]), "0");
    }
}
