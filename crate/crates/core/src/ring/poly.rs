//! Univariate polynomials over a finite field, including Cantor–Zassenhaus
//! factorization.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::FiniteField;

/// Little-endian coefficients, no trailing zeros. The zero polynomial is empty.
pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant(c: u32) -> Poly {
    trim(vec![c])
}

pub fn monomial_t() -> Poly {
    vec![0, 1]
}

pub fn add(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn neg(f: &FiniteField, a: &[u32]) -> Poly {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn sub(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &FiniteField, a: &[u32], c: u32) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Euclidean division; `b` must be nonzero.
pub fn div_rem(f: &FiniteField, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).unwrap();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u32; rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = f.mul(rem[dr], lead_inv);
        let shift = dr - db;
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, bc));
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn rem(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    div_rem(f, a, b).1
}

pub fn monic(f: &FiniteField, a: &[u32]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(f, a, f.inv(lead).unwrap()),
    }
}

pub fn gcd(f: &FiniteField, a: &[u32], b: &[u32]) -> Poly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn derivative(f: &FiniteField, a: &[u32]) -> Poly {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, f.from_i64(i as i64)))
        .collect();
    trim(out)
}

pub fn pow_mod(f: &FiniteField, base: &[u32], exp: &BigUint, modulus: &[u32]) -> Poly {
    let mut acc = rem(f, &[1], modulus);
    let base = rem(f, base, modulus);
    for i in (0..exp.bits()).rev() {
        acc = rem(f, &mul(f, &acc, &acc), modulus);
        if exp.bit(i) {
            acc = rem(f, &mul(f, &acc, &base), modulus);
        }
    }
    acc
}

/// Evaluate at a field element (Horner).
pub fn eval(f: &FiniteField, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// If every exponent with nonzero coefficient is divisible by `p`, return
/// the `p`-th root `g` with `g^p = a`.
fn pth_root_poly(f: &FiniteField, a: &[u32]) -> Poly {
    let p = f.characteristic() as usize;
    let out = a
        .iter()
        .step_by(p)
        .map(|&c| f.pth_root(c))
        .collect();
    trim(out)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with the
/// `g` squarefree, pairwise coprime and `a = prod g^e`.
fn squarefree(f: &FiniteField, a: &[u32]) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if degree(a).unwrap_or(0) == 0 {
        return out;
    }
    let p = f.characteristic();
    let d = derivative(f, a);
    if d.is_empty() {
        for (g, e) in squarefree(f, &pth_root_poly(f, a)) {
            out.push((g, e * p));
        }
        return out;
    }
    let mut c = gcd(f, a, &d);
    let mut w = div_rem(f, a, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(f, &w, &c);
        let fac = div_rem(f, &w, &y).0;
        if degree(&fac).unwrap_or(0) > 0 {
            out.push((monic(f, &fac), i));
        }
        i += 1;
        w = y;
        c = div_rem(f, &c, &w).0;
    }
    if degree(&c).unwrap_or(0) > 0 {
        for (g, e) in squarefree(f, &pth_root_poly(f, &c)) {
            out.push((g, e * p));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn distinct_degree(f: &FiniteField, a: &[u32]) -> Vec<(Poly, usize)> {
    let q = BigUint::from(f.order());
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let mut h = monomial_t();
    let mut i = 1;
    while degree(&rest).unwrap_or(0) >= 2 * i {
        h = pow_mod(f, &h, &q, &rest);
        let g = gcd(f, &rest, &sub(f, &h, &monomial_t()));
        if degree(&g).unwrap_or(0) > 0 {
            rest = div_rem(f, &rest, &g).0;
            h = rem(f, &h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if degree(&rest).unwrap_or(0) > 0 {
        let d = degree(&rest).unwrap();
        out.push((monic(f, &rest), d));
    }
    out
}

/// Equal-degree splitting of a product of irreducibles of degree `d`.
fn equal_degree(f: &FiniteField, a: &[u32], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = degree(a).unwrap();
    if n == d {
        out.push(monic(f, a));
        return;
    }
    let q = f.order();
    loop {
        let cand: Poly = trim((0..n).map(|_| rng.random_range(0..q)).collect());
        if degree(&cand).unwrap_or(0) == 0 {
            continue;
        }
        let b = if f.characteristic() == 2 {
            // absolute trace map: sum of cand^(2^j), j < k*d
            let k = f.degree() as usize;
            let mut term = rem(f, &cand, a);
            let mut acc = term.clone();
            for _ in 1..k * d {
                term = rem(f, &mul(f, &term, &term), a);
                acc = add(f, &acc, &term);
            }
            acc
        } else {
            let e = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
            sub(f, &pow_mod(f, &cand, &e, a), &[1])
        };
        let g = gcd(f, a, &b);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            equal_degree(f, &g, d, rng, out);
            equal_degree(f, &div_rem(f, a, &g).0, d, rng, out);
            return;
        }
    }
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities.
/// The leading coefficient is returned separately.
pub fn factor(f: &FiniteField, a: &[u32]) -> (u32, Vec<(Poly, u32)>) {
    let lead = *a.last().expect("cannot factor zero");
    let a = monic(f, a);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pieces: Vec<(Poly, u32)> = Vec::new();
    for (sq, e) in squarefree(f, &a) {
        for (g, d) in distinct_degree(f, &sq) {
            let mut irreducibles = Vec::new();
            equal_degree(f, &g, d, &mut rng, &mut irreducibles);
            for irr in irreducibles {
                match pieces.iter_mut().find(|(p, _)| *p == irr) {
                    Some((_, k)) => *k += e,
                    None => pieces.push((irr, e)),
                }
            }
        }
    }
    pieces.sort();
    (lead, pieces)
}

pub fn is_zero(a: &[u32]) -> bool {
    a.is_empty()
}

/// Polynomial with base-`q` digits of `idx` as coefficients.
pub fn from_index(q: u32, mut idx: BigUint) -> Poly {
    let mut out = Vec::new();
    let qb = BigUint::from(q);
    while !idx.is_zero() {
        let d = &idx % &qb;
        out.push(d.to_u32_digits().first().copied().unwrap_or(0));
        idx /= &qb;
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FiniteField {
        FiniteField::new(2).unwrap()
    }

    #[test]
    fn factors_t_cubed_plus_one_over_f2() {
        let f = f2();
        let (lead, fac) = factor(&f, &[1, 0, 0, 1]);
        assert_eq!(lead, 1);
        assert_eq!(fac, vec![(vec![1, 1], 1), (vec![1, 1, 1], 1)]);
    }

    #[test]
    fn factors_with_multiplicity_and_pth_powers() {
        let f = f2();
        // (T+1)^4 (T^2+T+1)^2 T
        let mut a = vec![0, 1];
        for _ in 0..4 {
            a = mul(&f, &a, &[1, 1]);
        }
        for _ in 0..2 {
            a = mul(&f, &a, &[1, 1, 1]);
        }
        let (_, fac) = factor(&f, &a);
        assert_eq!(fac, vec![(vec![0, 1], 1), (vec![1, 1], 4), (vec![1, 1, 1], 2)]);
    }

    #[test]
    fn factor_reconstructs_over_several_fields() {
        for q in [3u32, 4, 5, 9, 16] {
            let f = FiniteField::new(q).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(q as u64);
            for _ in 0..20 {
                let deg = rng.random_range(1..7);
                let mut a: Poly = (0..deg).map(|_| rng.random_range(0..q)).collect();
                a.push(rng.random_range(1..q));
                let (lead, fac) = factor(&f, &a);
                let mut prod = vec![lead];
                for (g, e) in &fac {
                    for _ in 0..*e {
                        prod = mul(&f, &prod, g);
                    }
                    // irreducible: no roots unless linear, and DDF says single degree
                    let dd = distinct_degree(&f, g);
                    assert_eq!(dd.len(), 1);
                    assert_eq!(dd[0].1, degree(g).unwrap());
                }
                assert_eq!(prod, a, "q={q}");
            }
        }
    }
}
