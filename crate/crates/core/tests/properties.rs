// SPDX-License-Identifier: Apache-2.0

use kaschlab::corpus::{duality_failures, random_presentation};
use kaschlab::dsl::{self, flatten};
use kaschlab::module::{hom_dim, regular};
use kaschlab::{analyze, Algebra, Field, FieldSpec, Matrix, PrimeField, Rationals, Side};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_axioms<F: Field>(f: &F, a: i64, b: i64, c: i64) {
    let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
    assert_eq!(f.add(&a, &b), f.add(&b, &a));
    assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
    assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
    assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
    assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
    assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
    match f.inv(&a) {
        Some(inv) => assert!(f.is_one(&f.mul(&a, &inv))),
        None => assert!(f.is_zero(&a)),
    }
}

fn matrix<F: Field>(f: &F, rows: usize, cols: usize, data: &[i64]) -> Matrix<F> {
    Matrix::from_vec(f, rows, cols, data.iter().map(|&x| f.from_i64(x)).collect()).unwrap()
}

fn check_linalg<F: Field>(f: &F, rows: usize, cols: usize, data: &[i64]) {
    let m = matrix(f, rows, cols, data);
    let k = m.kernel_basis();
    assert_eq!(m.rank() + k.rows(), cols);
    if k.rows() > 0 {
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
    }
    assert_eq!(m.transpose().rank(), m.rank());
    let r = m.rref();
    assert_eq!(r.matrix.rref().matrix, r.matrix);
    if rows == cols {
        match m.inverse() {
            Some(inv) => assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, rows)),
            None => assert!(m.rank() < rows),
        }
    }
}

fn random_algebra<F: Field>(f: &F, seed: u64) -> Option<Algebra<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = random_presentation(&mut rng, "random", f.spec());
    flatten(&q, f).ok().filter(|a| a.dim() <= 12)
}

fn check_algebra<F: Field>(f: &F, seed: u64) {
    let Some(alg) = random_algebra(f, seed) else { return };
    // structure() verifies the radical: an ideal, nilpotent, semisimple quotient
    let st = alg.structure().unwrap();
    assert!(st.radical().dim() < alg.dim());
    let top: usize =
        st.multiplicities().iter().zip(st.simples(Side::Right)).map(|(m, s)| m * s.dim()).sum();
    assert_eq!(top + st.radical().dim(), alg.dim());

    let text = dsl::serialize(&alg);
    let back = dsl::parse(&text).unwrap().build(f).unwrap();
    assert!(back.structurally_eq(&alg));
    assert_eq!(dsl::serialize(&back), text);

    let r = analyze(&alg).unwrap();
    assert!(r.agreement.consistent);
    let a = regular(&alg, Side::Right);
    assert_eq!(hom_dim(&a, &a).unwrap(), alg.dim());

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    assert_eq!(duality_failures(&alg, &mut rng, 4).unwrap(), 0);
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..4, r * c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(
        a in -1000i64..1000,
        b in -1000i64..1000,
        c in -1000i64..1000,
        p in prop::sample::select(vec![2u64, 3, 101, 257, 65521]),
    ) {
        field_axioms(&PrimeField::new(p).unwrap(), a, b, c);
    }

    #[test]
    fn rational_field_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        field_axioms(&Rationals, a, b, c);
    }

    #[test]
    fn rational_embedding(n in -50i64..50, d in 1i64..50) {
        let f = PrimeField::new(101).unwrap();
        let x = f.from_rational(&BigRational::new(n.into(), d.into())).unwrap();
        prop_assert_eq!(f.mul(&x, &f.from_i64(d)), f.from_i64(n));
    }

    #[test]
    fn linalg_over_gf7((rows, cols, data) in small_matrix()) {
        check_linalg(&PrimeField::new(7).unwrap(), rows, cols, &data);
    }

    #[test]
    fn linalg_over_rationals((rows, cols, data) in small_matrix()) {
        check_linalg(&Rationals, rows, cols, &data);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_algebras_over_gf101(seed in any::<u64>()) {
        check_algebra(&PrimeField::new(101).unwrap(), seed);
    }

    #[test]
    fn random_algebras_over_gf257(seed in any::<u64>()) {
        check_algebra(&PrimeField::new(257).unwrap(), seed);
    }

    #[test]
    fn random_algebras_over_rationals(seed in any::<u64>()) {
        check_algebra(&Rationals, seed);
    }

    #[test]
    fn small_characteristic_radicals(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let f = PrimeField::new(p).unwrap();
        if let Some(alg) = random_algebra(&f, seed) {
            let st = alg.structure().unwrap();
            let top: usize =
                st.multiplicities().iter().zip(st.simples(Side::Right)).map(|(m, s)| m * s.dim()).sum();
            prop_assert_eq!(top + st.radical().dim(), alg.dim());
        }
    }

    #[test]
    fn parser_never_panics(s in "[a-z0-9{}();,=*+/ \\-\n\"]{0,80}") {
        let _ = dsl::parse(&s);
        let _ = dsl::parse(&format!("algebra A over QQ {{ {s} }}"));
    }
}

#[test]
fn field_spec_parsing() {
    assert_eq!("GF(101)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
    assert_eq!("QQ".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    assert!("GF(100)".parse::<FieldSpec>().is_err());
}

