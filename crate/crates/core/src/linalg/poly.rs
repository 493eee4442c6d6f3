// SPDX-License-Identifier: Apache-2.0

//! Univariate polynomials over an exact field, stored low degree first, and
//! extraction of the roots that lie in the ground field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};

/// Largest prime for which roots are found by evaluating every residue.
const EXHAUSTIVE_PRIME_LIMIT: u64 = 4096;
/// Trial-division budget when enumerating divisors for the rational root test.
const TRIAL_DIVISION_LIMIT: u64 = 2_000_000;

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn trim<F: Field>(f: &F, p: &mut Poly<F>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<F: Field>(f: &F, p: &[F::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !f.is_zero(c))
}

pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let mut out: Poly<F> =
        (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, &mut out);
    out
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let mut out: Poly<F> =
        (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, &mut out);
    out
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            f.mul_add_assign(&mut out[i + j], x, y);
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder; panics on division by the zero polynomial.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>) {
    let db = degree(f, b).expect("division by zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("non-zero leading coefficient");
    let mut r: Poly<F> = a.to_vec();
    trim(f, &mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (j, bj) in b[..=db].iter().enumerate() {
            let t = f.mul(&c, bj);
            r[shift + j] = f.sub(&r[shift + j], &t);
        }
        q[shift] = c;
        trim(f, &mut r);
    }
    trim(f, &mut q);
    (q, r)
}

pub fn monic<F: Field>(f: &F, p: &[F::Elem]) -> Poly<F> {
    let mut p = p.to_vec();
    trim(f, &mut p);
    if let Some(last) = p.last().cloned() {
        let inv = f.inv(&last).expect("non-zero");
        for c in p.iter_mut() {
            *c = f.mul(c, &inv);
        }
    }
    p
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(f, &mut a);
    trim(f, &mut b);
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` and `g` monic.
pub fn ext_gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>, Poly<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(f, &mut r0);
    trim(f, &mut r1);
    let (mut s0, mut s1): (Poly<F>, Poly<F>) = (vec![f.one()], Vec::new());
    let (mut t0, mut t1): (Poly<F>, Poly<F>) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if let Some(d) = degree(f, &r0) {
        let inv = f.inv(&r0[d]).expect("non-zero");
        let scale = |p: &mut Poly<F>| {
            for c in p.iter_mut() {
                *c = f.mul(c, &inv);
            }
        };
        scale(&mut r0);
        scale(&mut s0);
        scale(&mut t0);
    }
    (r0, s0, t0)
}

fn powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Poly<F> {
    let mut acc: Poly<F> = divrem(f, &[f.one()], m).1;
    let mut b = divrem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), m).1;
        }
        b = divrem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    acc
}

/// Distinct roots in GF(p), sorted ascending.
pub fn roots_prime(f: &PrimeField, poly: &[u64]) -> Result<Vec<u64>> {
    let p = f.modulus();
    if degree(f, poly).is_none() {
        return Err(Error::ZeroPolynomial);
    }
    if p <= EXHAUSTIVE_PRIME_LIMIT {
        return Ok((0..p).filter(|x| eval(f, poly, x) == 0).collect());
    }
    // g = gcd(poly, x^p - x) is the product of the distinct linear factors
    let x = vec![0, 1];
    let xp = powmod(f, &x, p, poly);
    let g = gcd(f, poly, &sub(f, &xp, &x));
    let mut roots = Vec::new();
    split_linear_product(f, &g, &mut roots);
    roots.sort_unstable();
    Ok(roots)
}

/// Splits a monic product of distinct linear factors over GF(p), p odd.
fn split_linear_product(f: &PrimeField, g: &[u64], out: &mut Vec<u64>) {
    match degree(f, g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(&f.mul(&g[0], &f.inv(&g[1]).expect("monic")))),
        Some(_) => {
            let half = (f.modulus() - 1) / 2;
            for a in 0..f.modulus() {
                let h = powmod(f, &[a, 1], half, g);
                let d = gcd(f, g, &sub(f, &h, &[1]));
                let dd = degree(f, &d).unwrap_or(0);
                if dd > 0 && Some(dd) < degree(f, g) {
                    let (q, _) = divrem(f, g, &d);
                    split_linear_product(f, &d, out);
                    split_linear_product(f, &monic(f, &q), out);
                    return;
                }
            }
            unreachable!("equal-degree splitting exhausted all shifts");
        }
    }
}

/// Distinct rational roots, sorted ascending.
pub fn roots_rational(poly: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut p = poly.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    // factor out powers of x
    let lowest = p.iter().position(|c| !c.is_zero()).expect("non-zero polynomial");
    if lowest > 0 {
        roots.push(BigRational::zero());
        p.drain(..lowest);
    }
    let denom_lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &denom_lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let constant = ints[0].abs();
    let leading = ints[ints.len() - 1].abs();
    if ints.len() > 1 {
        let nums = divisors(&constant)?;
        let dens = divisors(&leading)?;
        for u in &nums {
            for v in &dens {
                if !u.gcd(v).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = BigRational::new(u * sign, v.clone());
                    if eval(&crate::field::Rationals, &p, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        let bound = BigInt::from(TRIAL_DIVISION_LIMIT);
        if n > &bound * &bound && n.to_u64().is_none_or(|v| !crate::field::is_prime(v)) {
            return Err(Error::UnsupportedField(
                "rational root search needs to factor a coefficient beyond the trial-division budget"
                    .into(),
            ));
        }
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (q, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pw);
                pw *= &q;
            }
        }
        out = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn roots_of_x2_minus_1_mod_7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(roots_prime(&f, &[6, 0, 1]).unwrap(), vec![1, 6]);
    }

    #[test]
    fn large_prime_uses_splitting() {
        let f = PrimeField::new(1_000_003).unwrap();
        // (x - 5)(x - 77)(x^2 + 1); -1 is a non-residue since p = 3 mod 4
        let lin = mul(&f, &[f.neg(&5), 1], &[f.neg(&77), 1]);
        let p = mul(&f, &lin, &[1, 0, 1]);
        assert_eq!(roots_prime(&f, &p).unwrap(), vec![5, 77]);
    }

    #[test]
    fn rational_roots() {
        assert_eq!(roots_rational(&[q(0), q(-1), q(1)]).unwrap(), vec![q(0), q(1)]);
        assert!(roots_rational(&[q(1), q(0), q(1)]).unwrap().is_empty());
        // 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
        let r = roots_rational(&[q(1), q(-5), q(6)]).unwrap();
        assert_eq!(r, vec![BigRational::new(1.into(), 3.into()), BigRational::new(1.into(), 2.into())]);
        assert_eq!(roots_rational(&[q(0), q(0)]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = Rationals;
        let a = vec![q(-1), q(0), q(1)];
        let b = vec![q(1), q(1)];
        let (g, s, t) = ext_gcd(&f, &a, &b);
        assert_eq!(g, vec![q(1), q(1)]);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }
}
