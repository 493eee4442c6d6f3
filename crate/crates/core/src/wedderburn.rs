// SPDX-License-Identifier: Apache-2.0

//! Radical, semisimple quotient, primitive idempotents and simple modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vec, poly, solve, sub_vec, EchelonBasis, Matrix};
use crate::module::{hom_dim, regular, top_with, ModuleRep, Side};

/// Number of pseudo-random splitting candidates tried per idempotent.
const RANDOM_CANDIDATES: usize = 64;
/// Hard cap on the cubic lifting iteration.
const MAX_LIFT_STEPS: usize = 64;

/// Everything the property deciders need about the shape of an algebra.
#[derive(Debug)]
pub struct Structure<F: Field> {
    radical: EchelonBasis<F>,
    nilpotency_index: usize,
    quotient: Algebra<F>,
    section: Vec<usize>,
    idempotents: Vec<Vec<F::Elem>>,
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    multiplicities: Vec<usize>,
    right_simples: Vec<ModuleRep<F>>,
    left_simples: Vec<ModuleRep<F>>,
    endo_dims: Vec<usize>,
    lift_steps: usize,
}

impl<F: Field> Structure<F> {
    pub(crate) fn compute(alg: &Algebra<F>) -> Result<Self> {
        let (radical, nilpotency_index, quotient) = radical_data(alg)?;
        let section = radical.non_pivots();
        let bar_idems = split_unit(&quotient)?;
        let (idempotents, lift_steps) = lift_idempotents(alg, &section, &bar_idems)?;
        check_decomposition(alg, &idempotents)?;

        let j = radical.rows().to_vec();
        let right_reg = regular(alg, Side::Right);
        let left_reg = regular(alg, Side::Left);
        let mut tops = Vec::with_capacity(idempotents.len());
        for e in &idempotents {
            let (ea, _) = right_reg.submodule(&alg.left_mult_matrix(e)?.row_vecs())?;
            tops.push(top_with(&ea, &j)?.0);
        }
        let mut class_of = vec![usize::MAX; idempotents.len()];
        let mut representatives: Vec<usize> = Vec::new();
        for i in 0..idempotents.len() {
            for (c, &r) in representatives.iter().enumerate() {
                if hom_dim(&tops[r], &tops[i])? > 0 {
                    class_of[i] = c;
                    break;
                }
            }
            if class_of[i] == usize::MAX {
                class_of[i] = representatives.len();
                representatives.push(i);
            }
        }
        let s = representatives.len();
        let mut multiplicities = vec![0; s];
        for &c in &class_of {
            multiplicities[c] += 1;
        }

        let mut right_simples = Vec::with_capacity(s);
        let mut left_simples = Vec::with_capacity(s);
        let mut endo_dims = Vec::with_capacity(s);
        for (c, &r) in representatives.iter().enumerate() {
            let e = &idempotents[r];
            let right = tops[r].clone().with_label(format!("S{}", c + 1));
            let (ae, _) = left_reg.submodule(&alg.right_mult_matrix(e)?.row_vecs())?;
            let left = top_with(&ae, &j)?.0.with_label(format!("S{}'", c + 1));
            let d = hom_dim(&right, &right)?;
            if d != 1 || hom_dim(&left, &left)? != 1 {
                return Err(Error::SplittingFailed(format!(
                    "simple module {} has a {d}-dimensional endomorphism ring",
                    c + 1
                )));
            }
            right_simples.push(right);
            left_simples.push(left);
            endo_dims.push(d);
        }
        let covered: usize =
            right_simples.iter().zip(&multiplicities).map(|(s, n)| s.dim() * n).sum();
        if covered != quotient.dim() {
            return Err(Error::IncompleteDecomposition(format!(
                "simples cover {covered} of the {} dimensions of A/J",
                quotient.dim()
            )));
        }

        Ok(Structure {
            radical,
            nilpotency_index,
            quotient,
            section,
            idempotents,
            class_of,
            representatives,
            multiplicities,
            right_simples,
            left_simples,
            endo_dims,
            lift_steps,
        })
    }

    /// Echelon basis of the Jacobson radical.
    pub fn radical(&self) -> &EchelonBasis<F> {
        &self.radical
    }

    /// Least `k` with `J^k = 0`; 1 when `J = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency_index
    }

    /// `A/J` on the basis elements of `A` outside the radical's pivot columns.
    pub fn quotient(&self) -> &Algebra<F> {
        &self.quotient
    }

    /// Basis indices of `A` used as the basis of `A/J`.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    /// Complete set of primitive orthogonal idempotents of `A`.
    pub fn idempotents(&self) -> &[Vec<F::Elem>] {
        &self.idempotents
    }

    pub fn class_of(&self, idempotent: usize) -> usize {
        self.class_of[idempotent]
    }

    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }

    /// Number of idempotents in each class.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// The chosen idempotent `e_i` for class `i`.
    pub fn class_idempotent(&self, class: usize) -> &[F::Elem] {
        &self.idempotents[self.representatives[class]]
    }

    /// Simple modules on the given side; index `i` is the top of `e_i A` (right)
    /// or `A e_i` (left).
    pub fn simples(&self, side: Side) -> &[ModuleRep<F>] {
        match side {
            Side::Right => &self.right_simples,
            Side::Left => &self.left_simples,
        }
    }

    /// `dim End(S_i)`.
    pub fn endo_dim(&self, class: usize) -> usize {
        self.endo_dims[class]
    }

    /// Cubic lifting steps used for the whole decomposition.
    pub fn lift_steps(&self) -> usize {
        self.lift_steps
    }
}

fn trace_of_product<F: Field>(f: &F, x: &Matrix<F>, y: &Matrix<F>) -> F::Elem {
    let n = x.rows();
    let mut acc = f.zero();
    for a in 0..n {
        for b in 0..n {
            let xa = x.get(a, b);
            if !f.is_zero(xa) {
                f.mul_add_assign(&mut acc, xa, y.get(b, a));
            }
        }
    }
    acc
}

/// Gram matrix of `(x, y) -> Tr(L_x L_y)` on the basis.
fn trace_form<F: Field>(alg: &Algebra<F>) -> Result<Matrix<F>> {
    let f = alg.field();
    let d = alg.dim();
    let mats: Vec<Matrix<F>> =
        (0..d).map(|i| alg.left_mult_matrix(&alg.basis_element(i))).collect::<Result<_>>()?;
    let mut g = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in i..d {
            let t = trace_of_product(f, &mats[i], &mats[j]);
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    Ok(g)
}

/// `(Tr(X^(p^i)) / p^i) mod p` for an integer lift `X` of a matrix over GF(p).
fn lifted_trace<F: Field>(f: &F, m: &Matrix<F>, p: u64, i: u32) -> Result<u64> {
    let n = m.rows();
    let pi = (p as u128).pow(i);
    let modulus = pi * p as u128;
    let lift: Vec<u128> = m.data().iter().map(|x| f.residue(x).expect("prime field") as u128).collect();
    let mul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut c = vec![0u128; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a[r * n + k];
                if x == 0 {
                    continue;
                }
                for s in 0..n {
                    c[r * n + s] = (c[r * n + s] + x * b[k * n + s]) % modulus;
                }
            }
        }
        c
    };
    // X^(p^i) by i rounds of p-th powers
    let mut power = lift;
    for _ in 0..i {
        let base = power.clone();
        for _ in 1..p {
            power = mul(&power, &base);
        }
    }
    let trace = (0..n).map(|r| power[r * n + r]).sum::<u128>() % modulus;
    if !trace.is_multiple_of(pi) {
        return Err(Error::RadicalVerificationFailed(format!(
            "lifted trace is not divisible by {pi}"
        )));
    }
    Ok(((trace / pi) % p as u128) as u64)
}

/// Candidate radical. In characteristic 0 or `p > dim` this is the radical of
/// the trace form. For `0 < p <= dim` the trace-form kernel is refined by the
/// lifted trace functionals `x -> (Tr(L_x^(p^i)) / p^i) mod p` for
/// `i = 1..=floor(log_p dim)`.
fn radical_candidate<F: Field>(alg: &Algebra<F>) -> Result<EchelonBasis<F>> {
    let f = alg.field();
    let d = alg.dim();
    let mut current = EchelonBasis::from_matrix(&trace_form(alg)?.kernel_basis());
    let p = f.characteristic();
    if p == 0 || p as usize > d {
        return Ok(current);
    }
    let mut rounds = 0u32;
    while (p as u128).pow(rounds + 1) <= d as u128 {
        rounds += 1;
    }
    let basis: Vec<Vec<F::Elem>> = (0..d).map(|t| alg.basis_element(t)).collect();
    for i in 1..=rounds {
        if current.dim() == 0 {
            break;
        }
        let rows = current.rows().to_vec();
        let mut phi = Matrix::zeros(f, rows.len(), d);
        for (k, r) in rows.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let l = alg.left_mult_matrix(&alg.mul(r, b))?;
                phi.set(k, j, f.from_i64(lifted_trace(f, &l, p, i)? as i64));
            }
        }
        let coeffs = phi.left_kernel_basis();
        let mut next = EchelonBasis::new(f, d);
        for c in coeffs.row_vecs() {
            let mut v = vec![f.zero(); d];
            for (ck, r) in c.iter().zip(&rows) {
                axpy(f, &mut v, ck, r);
            }
            next.insert(&v);
        }
        current = next;
    }
    Ok(current)
}

/// Candidate radical, verified to be a nilpotent ideal with semisimple quotient.
fn radical_data<F: Field>(alg: &Algebra<F>) -> Result<(EchelonBasis<F>, usize, Algebra<F>)> {
    let d = alg.dim();
    let candidate = radical_candidate(alg)?;
    let fail = Error::RadicalVerificationFailed;

    // two-sided ideal
    for v in candidate.rows() {
        for t in 0..d {
            let b = alg.basis_element(t);
            if !candidate.contains(&alg.mul(v, &b)) || !candidate.contains(&alg.mul(&b, v)) {
                return Err(fail("radical candidate is not an ideal".into()));
            }
        }
    }

    // nilpotent
    let mut index = 1;
    let mut power = candidate.clone();
    while power.dim() > 0 {
        let next = alg.product_span(power.rows(), candidate.rows());
        if next.dim() == power.dim() {
            return Err(fail("radical candidate is not nilpotent".into()));
        }
        power = next;
        index += 1;
    }

    // semisimple quotient: its own candidate radical vanishes
    let quotient = alg
        .quotient_by_ideal(&candidate.to_matrix())
        .map_err(|e| fail(format!("quotient by the radical failed: {e}")))?
        .renamed(format!("{}/J", alg.name()));
    if radical_candidate(&quotient)?.dim() != 0 {
        return Err(fail("quotient by the radical candidate is not semisimple".into()));
    }
    Ok((candidate, index, quotient))
}

/// Span of `e x e` over the basis.
fn corner<F: Field>(alg: &Algebra<F>, e: &[F::Elem]) -> EchelonBasis<F> {
    let mut span = EchelonBasis::new(alg.field(), alg.dim());
    for t in 0..alg.dim() {
        let x = alg.mul(&alg.mul(e, &alg.basis_element(t)), e);
        span.insert(&x);
    }
    span
}

/// Minimal polynomial of `z` in the corner algebra with identity `e`,
/// together with the powers `e, z, z^2, ...` below its degree.
fn min_poly<F: Field>(
    alg: &Algebra<F>,
    e: &[F::Elem],
    z: &[F::Elem],
) -> Result<(Vec<F::Elem>, Vec<Vec<F::Elem>>)> {
    let f = alg.field();
    let d = alg.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = alg.mul(powers.last().expect("non-empty"), z);
        let a = Matrix::from_rows(f, d, powers.clone())?.transpose();
        let b = Matrix::from_vec(f, d, 1, next.clone())?;
        if let Some(c) = solve(&a, &b)? {
            let mut mu: Vec<F::Elem> = c.data().iter().map(|x| f.neg(x)).collect();
            mu.push(f.one());
            return Ok((mu, powers));
        }
        powers.push(next);
    }
}

/// An idempotent `p(z)` strictly between 0 and `e`, if `z` has a rational
/// eigenvalue whose generalized eigenspace is proper.
fn split_by<F: Field>(alg: &Algebra<F>, e: &[F::Elem], z: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    let f = alg.field();
    let (mu, powers) = min_poly(alg, e, z)?;
    if mu.len() <= 2 {
        return Ok(None);
    }
    let roots = match f.linear_roots(&mu) {
        Ok(r) => r,
        Err(Error::UnsupportedField(_)) => return Ok(None),
        Err(other) => return Err(other),
    };
    for lambda in roots {
        let linear = vec![f.neg(&lambda), f.one()];
        let mut a: Vec<F::Elem> = vec![f.one()];
        let mut q = mu.clone();
        loop {
            let (quo, rem) = poly::divrem(f, &q, &linear);
            if !rem.is_empty() {
                break;
            }
            q = quo;
            a = poly::mul(f, &a, &linear);
        }
        if poly::degree(f, &q).unwrap_or(0) == 0 {
            continue;
        }
        // s a + t q = 1; t q is 1 on the lambda-part and 0 elsewhere
        let (_, _, t) = poly::ext_gcd(f, &a, &q);
        let idem_poly = poly::divrem(f, &poly::mul(f, &t, &q), &mu).1;
        let mut x = vec![f.zero(); alg.dim()];
        for (c, p) in idem_poly.iter().zip(&powers) {
            axpy(f, &mut x, c, p);
        }
        if alg.mul(&x, &x) == x && !is_zero_vec(f, &x) && x != e {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn seed_from_constants<F: Field>(alg: &Algebra<F>) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    alg.dim().hash(&mut h);
    alg.structure_constants().hash(&mut h);
    h.finish()
}

/// Splits `1` in a semisimple algebra into primitive orthogonal idempotents.
fn split_unit<F: Field>(alg: &Algebra<F>) -> Result<Vec<Vec<F::Elem>>> {
    let f = alg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_from_constants(alg));
    let mut done = Vec::new();
    let mut todo = vec![alg.unit().to_vec()];
    while let Some(e) = todo.pop() {
        let c = corner(alg, &e);
        if c.dim() == 1 {
            done.push(e);
            continue;
        }
        let base = c.rows().to_vec();
        let mut candidates = base.clone();
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                candidates.push(crate::linalg::add_vec(f, &base[i], &base[j]));
            }
        }
        let mut found = None;
        for z in &candidates {
            if let Some(x) = split_by(alg, &e, z)? {
                found = Some(x);
                break;
            }
        }
        if found.is_none() {
            for _ in 0..RANDOM_CANDIDATES {
                let mut z = vec![f.zero(); alg.dim()];
                for b in &base {
                    let c = f.from_i64(rng.gen_range(-3..=3));
                    axpy(f, &mut z, &c, b);
                }
                if let Some(x) = split_by(alg, &e, &z)? {
                    found = Some(x);
                    break;
                }
            }
        }
        let Some(x) = found else {
            return Err(Error::SplittingFailed(format!(
                "no tried element of a {}-dimensional corner of {} has an eigenvalue in {}; \
                 try a prime field",
                c.dim(),
                alg.name(),
                f.spec()
            )));
        };
        let rest = sub_vec(f, &e, &x);
        todo.push(rest);
        todo.push(x);
    }
    done.sort_by(|a, b| {
        let lead = |v: &[F::Elem]| v.iter().position(|c| !f.is_zero(c));
        lead(a).cmp(&lead(b)).then_with(|| a.cmp(b))
    });
    Ok(done)
}

/// Lifts orthogonal idempotents of `A/J` to `A`, one at a time inside the
/// complement of those already lifted.
fn lift_idempotents<F: Field>(
    alg: &Algebra<F>,
    section: &[usize],
    bar: &[Vec<F::Elem>],
) -> Result<(Vec<Vec<F::Elem>>, usize)> {
    let f = alg.field();
    let d = alg.dim();
    let lift = |v: &[F::Elem]| -> Vec<F::Elem> {
        let mut out = vec![f.zero(); d];
        for (c, &k) in v.iter().zip(section) {
            out[k] = c.clone();
        }
        out
    };
    let two = f.from_i64(2);
    let three = f.from_i64(3);
    let mut lifted: Vec<Vec<F::Elem>> = Vec::with_capacity(bar.len());
    let mut rest = alg.unit().to_vec();
    let mut steps = 0;
    for (k, b) in bar.iter().enumerate() {
        let e = if k + 1 == bar.len() {
            rest.clone()
        } else {
            let x = lift(b);
            let mut e = alg.mul(&alg.mul(&rest, &x), &rest);
            let mut n = 0;
            loop {
                let e2 = alg.mul(&e, &e);
                if e2 == e {
                    break;
                }
                if n == MAX_LIFT_STEPS {
                    return Err(Error::InvariantViolation("idempotent lifting did not converge".into()));
                }
                let e3 = alg.mul(&e2, &e);
                e = e2
                    .iter()
                    .zip(&e3)
                    .map(|(a, c)| f.sub(&f.mul(&three, a), &f.mul(&two, c)))
                    .collect();
                n += 1;
            }
            steps += n;
            e
        };
        rest = sub_vec(f, &rest, &e);
        lifted.push(e);
    }
    Ok((lifted, steps))
}

fn check_decomposition<F: Field>(alg: &Algebra<F>, idems: &[Vec<F::Elem>]) -> Result<()> {
    let f = alg.field();
    let mut sum = alg.zero_element();
    for (i, e) in idems.iter().enumerate() {
        sum = crate::linalg::add_vec(f, &sum, e);
        for (j, g) in idems.iter().enumerate() {
            let p = alg.mul(e, g);
            let ok = if i == j { p == *e } else { is_zero_vec(f, &p) };
            if !ok || is_zero_vec(f, e) {
                return Err(Error::InvariantViolation(format!(
                    "idempotents {} and {} are not orthogonal idempotents",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if sum != alg.unit() {
        return Err(Error::InvariantViolation("idempotents do not sum to 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn matrix_algebra_is_semisimple_with_one_class() {
        let f = PrimeField::new(7).unwrap();
        let m2 = Algebra::matrix_algebra(&f, 2).unwrap();
        let st = m2.structure().unwrap();
        assert_eq!(st.radical().dim(), 0);
        assert_eq!(st.nilpotency_index(), 1);
        assert_eq!(st.idempotents().len(), 2);
        assert_eq!(st.num_classes(), 1);
        assert_eq!(st.multiplicities(), &[2]);
        assert_eq!(st.simples(Side::Right)[0].dim(), 2);
    }

    #[test]
    fn triangular_radical_and_idempotents() {
        let q = Rationals;
        let t2 = Algebra::triangular_algebra(&q, 2).unwrap();
        let st = t2.structure().unwrap();
        assert_eq!(st.radical().rows(), &[t2.basis_element(1)]);
        assert_eq!(st.nilpotency_index(), 2);
        assert_eq!(st.idempotents(), &[t2.basis_element(0), t2.basis_element(2)]);
        assert_eq!(st.multiplicities(), &[1, 1]);
        assert!(st.simples(Side::Right).iter().all(|s| s.dim() == 1));
    }

    #[test]
    fn product_of_fields_splits() {
        let q = Rationals;
        let k = Algebra::truncated_poly(&q, 1).unwrap();
        let kk = k.product(&k).unwrap();
        let st = kk.structure().unwrap();
        assert_eq!(st.idempotents(), &[kk.basis_element(0), kk.basis_element(1)]);
        assert_eq!(st.num_classes(), 2);
    }

    #[test]
    fn non_split_quotient_is_reported() {
        // Q[x]/(x^2 + 1) is a field that does not split over Q
        let q = Rationals;
        let one = q.one();
        let z = q.zero();
        let m1 = q.from_i64(-1);
        let consts = vec![one.clone(), z.clone(), z.clone(), one.clone(), z.clone(), one, m1, z];
        let a = Algebra::new(&q, "Qi", vec!["1".into(), "i".into()], consts, None).unwrap();
        assert!(matches!(a.structure(), Err(Error::SplittingFailed(_))));
    }

    #[test]
    fn small_characteristic_radicals() {
        let f2 = PrimeField::new(2).unwrap();
        // the plain trace form of M2 over GF(2) vanishes identically
        let m2 = Algebra::matrix_algebra(&f2, 2).unwrap();
        assert_eq!(trace_form(&m2).unwrap().rank(), 0);
        let st = m2.structure().unwrap();
        assert_eq!(st.radical().dim(), 0);
        assert_eq!(st.multiplicities(), &[2]);
        let t2 = Algebra::triangular_algebra(&f2, 2).unwrap();
        assert_eq!(t2.structure().unwrap().radical().dim(), 1);
        let t3 = Algebra::triangular_algebra(&PrimeField::new(3).unwrap(), 3).unwrap();
        assert_eq!(t3.structure().unwrap().radical().dim(), 3);
        // GF(p)[C_p] is local with radical of codimension 1
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            let g = crate::algebra::GroupTable::cyclic(p as usize);
            let kg = Algebra::group_algebra(&f, &g).unwrap();
            let st = kg.structure().unwrap();
            assert_eq!(st.radical().dim(), p as usize - 1, "p = {p}");
            assert_eq!(st.nilpotency_index(), p as usize);
        }
        // M2(GF(2)) x T2(GF(2)) mixes both behaviours
        let mixed = m2.product(&t2).unwrap();
        assert_eq!(mixed.structure().unwrap().radical().dim(), 1);
    }

    #[test]
    fn lifted_idempotents_agree_modulo_radical() {
        let f = PrimeField::new(101).unwrap();
        let t3 = Algebra::triangular_algebra(&f, 3).unwrap();
        let st = t3.structure().unwrap();
        assert_eq!(st.idempotents().len(), 3);
        let total: usize = st
            .idempotents()
            .iter()
            .map(|e| t3.left_mult_matrix(e).unwrap().rank())
            .sum();
        assert_eq!(total, t3.dim());
        assert_eq!(st.nilpotency_index(), 3);
    }
}
