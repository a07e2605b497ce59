//! Finite fields `F_q`, `q = p^k <= 2^16`.
//!
//! Elements are encoded as integers in `0..q`: the base-`p` digits of the
//! index are the coefficients of the element written as a polynomial in a
//! fixed primitive generator's minimal polynomial basis. For prime `q` the
//! index is just the residue mod `p`.

use crate::error::{Error, Result};

/// Upper bound on the field size.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    q: u32,
    /// `exp[i] = g^i` for a primitive element `g` (only for `degree > 1`).
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FiniteField {}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Dense little-endian polynomial helpers over the prime field, used only
/// while building the tables.
fn poly_mod(mut a: Vec<u32>, f: &[u32], p: u32) -> Vec<u32> {
    let n = f.len() - 1;
    // f is monic
    while a.len() > n {
        let lead = a.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = a.len() - n;
        for (i, &c) in f[..n].iter().enumerate() {
            let idx = shift + i;
            a[idx] = (a[idx] + p - (lead * c) % p) % p;
        }
    }
    a
}

fn is_irreducible_small(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        // every monic polynomial of degree d
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g: Vec<u32> = digits(idx, p, d);
            g.push(1);
            if poly_mod(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(mut idx: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_ORDER {
            return Err(Error::UnsupportedRing(format!("field order {q} exceeds 2^16")));
        }
        let (p, degree) = prime_power(q)
            .ok_or_else(|| Error::UnsupportedRing(format!("{q} is not a prime power")))?;
        let mut field = FiniteField { p, degree, q, exp: Vec::new(), log: Vec::new() };
        if degree > 1 {
            field.build_tables();
        }
        Ok(field)
    }

    fn build_tables(&mut self) {
        let (p, k, q) = (self.p, self.degree as usize, self.q);
        let modulus = (0..p.pow(k as u32))
            .map(|idx| {
                let mut f = digits(idx, p, k);
                f.push(1);
                f
            })
            .find(|f| is_irreducible_small(f, p))
            .expect("an irreducible polynomial of every degree exists");
        let mul_raw = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a, p, k), digits(b, p, k));
            let mut prod = vec![0u32; 2 * k - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut r = poly_mod(prod, &modulus, p);
            r.resize(k, 0);
            undigits(&r, p)
        };
        for g in 2..q {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![u32::MAX; q as usize];
            let mut cur = 1u32;
            let mut ok = true;
            for i in 0..q - 1 {
                if log[cur as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[cur as usize] = i;
                exp.push(cur);
                cur = mul_raw(cur, g);
            }
            if ok && cur == 1 {
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return (self.p - a % self.p) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let l = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[l as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.degree == 1 {
            return Some(self.pow(a, self.p - 2));
        }
        let l = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Some(self.exp[l as usize])
    }

    pub fn pow(&self, a: u32, mut e: u32) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `p`-th root; Frobenius is a bijection so this is `a^(q/p)`.
    pub fn pth_root(&self, a: u32) -> u32 {
        self.pow(a, self.q / self.p)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// All field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// An additive basis of the field over its prime subfield.
    pub fn additive_basis(&self) -> Vec<u32> {
        (0..self.degree).map(|i| self.p.pow(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
        assert!(FiniteField::new(1 << 17).is_err());
    }

    #[test]
    fn field_axioms_small() {
        for q in [2, 3, 4, 8, 9, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, q - 1] {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_root() {
        let f = FiniteField::new(9).unwrap();
        for a in f.elements() {
            let r = f.pth_root(a);
            assert_eq!(f.pow(r, 3), a);
        }
    }

    #[test]
    fn largest_field_builds() {
        let f = FiniteField::new(1 << 16).unwrap();
        assert_eq!(f.characteristic(), 2);
        assert_eq!(f.mul(f.inv(12345).unwrap(), 12345), 1);
    }
}
