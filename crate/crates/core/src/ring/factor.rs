//! Prime factorization by trial division (rational primes) plus splitting
//! of rational primes in the quadratic rings; Cantor–Zassenhaus for `F_q[T]`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{poly, Ring, RingElement, RingKind};
use crate::error::{Error, Result};

/// `value = unit * prod p^e` with canonical, pairwise non-associate primes
/// sorted by (norm, element order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: RingElement,
    pub factors: Vec<(RingElement, u32)>,
}

fn is_rational_prime(n: &num_bigint::BigUint) -> bool {
    let two = num_bigint::BigUint::from(2u32);
    if *n < two {
        return false;
    }
    let mut d = two;
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1u32;
    }
    true
}

fn rational_factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

impl Ring {
    /// Factor a nonzero non-unit.
    pub fn factor(&self, m: &RingElement) -> Result<Factorization> {
        self.check_nonunit(m)?;
        let canon = self.canonical(m);
        let mut factors: Vec<(RingElement, u32)> = match self.kind {
            RingKind::Integers => rational_factor(canon.int())
                .into_iter()
                .map(|(p, e)| (RingElement::Int(p), e))
                .collect(),
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                let mut rest = canon.clone();
                let mut out = Vec::new();
                let norm = BigInt::from(self.norm(&canon));
                for (p, _) in rational_factor(&norm) {
                    for pi in self.primes_above(&p) {
                        let mut e = 0;
                        while let Some(q) = self.exact_div(&rest, &pi) {
                            rest = q;
                            e += 1;
                        }
                        if e > 0 {
                            out.push((pi, e));
                        }
                    }
                }
                debug_assert!(self.is_unit(&rest));
                out
            }
            RingKind::PolynomialsOverFq(_) => {
                let (_, pieces) = poly::factor(self.fq(), canon.poly());
                pieces.into_iter().map(|(g, e)| (RingElement::Poly(g), e)).collect()
            }
        };
        factors.sort_by(|a, b| self.norm(&a.0).cmp(&self.norm(&b.0)).then_with(|| a.0.cmp(&b.0)));
        // m = u^{-1} * canon and canon = prod p^e exactly (all factors canonical)
        let prod = factors
            .iter()
            .fold(self.one(), |acc, (p, e)| self.mul(&acc, &self.pow(p, *e)));
        let unit = self.exact_div(m, &prod).expect("factorization reproduces its input");
        debug_assert!(self.is_unit(&unit));
        Ok(Factorization { unit, factors })
    }

    /// Canonical primes of a quadratic ring lying above the rational prime
    /// `p`: a root `x` of the minimal polynomial of `theta` mod `p` gives
    /// the prime `gcd(p, x - theta)`; no root means `p` is inert.
    fn primes_above(&self, p: &BigInt) -> Vec<RingElement> {
        let pe = self.from_bigint(p);
        let pu = p.to_u64().expect("rational prime fits in u64");
        let min_poly = |x: u64| -> u64 {
            let x = x as u128;
            let p = pu as u128;
            let v = match self.kind {
                RingKind::GaussianIntegers => x * x + 1,
                _ => x * x + x + 1,
            };
            (v % p) as u64
        };
        let mut out: Vec<RingElement> = Vec::new();
        for x in 0..pu {
            if min_poly(x) == 0 {
                let cand = self.sub(&self.from_bigint(&BigInt::from(x)), &self.generator());
                let g = self.gcd(&pe, &cand);
                if !self.is_unit(&g) && g != self.canonical(&pe) && !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        if out.is_empty() {
            out.push(self.canonical(&pe));
        }
        out
    }

    /// Is `p` a prime element?
    pub fn is_prime(&self, p: &RingElement) -> bool {
        if self.is_zero(p) || self.is_unit(p) {
            return false;
        }
        match self.kind {
            RingKind::Integers => is_rational_prime(p.int().magnitude()),
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                // prime iff the norm is a rational prime, or p is an inert
                // rational prime up to units
                let n = self.norm(p);
                if is_rational_prime(&n) {
                    return true;
                }
                let root = n.sqrt();
                if &root * &root != n || !is_rational_prime(&root) {
                    return false;
                }
                let q = BigInt::from(root);
                self.canonical(p) == self.canonical(&self.from_bigint(&q))
                    && self.primes_above(&q) == vec![self.canonical(&self.from_bigint(&q))]
            }
            RingKind::PolynomialsOverFq(_) => match self.factor(p) {
                Ok(f) => f.factors.len() == 1 && f.factors[0].1 == 1,
                Err(_) => false,
            },
        }
    }

    /// Distinct canonical primes dividing `m`.
    pub fn prime_divisors(&self, m: &RingElement) -> Vec<RingElement> {
        match self.factor(m) {
            Ok(f) => f.factors.into_iter().map(|(p, _)| p).collect(),
            Err(_) => Vec::new(),
        }
    }

    /// Canonical primes `p` with `N(p) <= bound` dividing `m`, found without
    /// factoring `m` (useful when `m` is large but only small primes matter).
    pub fn small_prime_divisors(&self, m: &RingElement, bound: u64) -> Vec<RingElement> {
        self.primes_up_to_norm(bound)
            .into_iter()
            .filter(|p| self.divides(p, m))
            .collect()
    }

    /// Canonical primes of norm at most `bound`, ordered by norm.
    pub fn primes_up_to_norm(&self, bound: u64) -> Vec<RingElement> {
        self.nonunits_up_to_norm(bound)
            .into_iter()
            .filter(|p| self.is_prime(p))
            .collect()
    }

    /// All canonical divisors of a nonzero `m`, ordered by norm.
    pub fn divisors(&self, m: &RingElement) -> Result<Vec<RingElement>> {
        if self.is_zero(m) {
            return Err(Error::DegenerateInput("divisors of zero".into()));
        }
        let mut out = vec![self.one()];
        if !self.is_unit(m) {
            for (p, e) in self.factor(m)?.factors {
                let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
                for d in &out {
                    let mut pk = d.clone();
                    next.push(pk.clone());
                    for _ in 0..e {
                        pk = self.mul(&pk, &p);
                        next.push(pk.clone());
                    }
                }
                out = next;
            }
        }
        let mut out: Vec<RingElement> = out.iter().map(|d| self.canonical(d)).collect();
        out.sort_by(|a, b| self.norm(a).cmp(&self.norm(b)).then_with(|| a.cmp(b)));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(r: &Ring, m: &RingElement) {
        let f = r.factor(m).unwrap();
        let prod = f
            .factors
            .iter()
            .fold(f.unit.clone(), |acc, (p, e)| r.mul(&acc, &r.pow(p, *e)));
        assert_eq!(&prod, m);
        for (p, _) in &f.factors {
            assert!(r.is_canonical(p));
            // R/(p) has no zero divisors
            if r.norm_u64(p) <= 64 {
                let res = r.residues(p).unwrap();
                for a in res.iter().filter(|a| !r.is_zero(a)) {
                    for b in res.iter().filter(|b| !r.is_zero(b)) {
                        assert!(!r.divides(p, &r.mul(a, b)), "{p:?} is not prime");
                    }
                }
            }
        }
    }

    #[test]
    fn examples() {
        let z = Ring::integers();
        let f = z.factor(&z.from_i64(12)).unwrap();
        assert_eq!(f.factors, vec![(z.from_i64(2), 2), (z.from_i64(3), 1)]);

        let g = Ring::gaussian();
        let f = g.factor(&g.from_i64(2)).unwrap();
        assert_eq!(f.unit, g.quad_elem(0, -1));
        assert_eq!(f.factors, vec![(g.quad_elem(1, 1), 2)]);

        let p = Ring::poly_fq(2).unwrap();
        let f = p.factor(&p.poly_elem(&[1, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p.poly_elem(&[1, 1]), 1), (p.poly_elem(&[1, 1, 1]), 1)]);

        assert!(z.factor(&z.from_i64(-1)).is_err());
        assert!(z.factor(&z.zero()).is_err());
    }

    #[test]
    fn reconstructs_small_elements() {
        for r in [Ring::integers(), Ring::gaussian(), Ring::eisenstein(), Ring::poly_fq(3).unwrap()] {
            for m in r.elements_up_to_norm(200) {
                if !r.is_zero(&m) && !r.is_unit(&m) {
                    check(&r, &m);
                }
            }
        }
    }

    #[test]
    fn eisenstein_ramified_prime() {
        let w = Ring::eisenstein();
        let f = w.factor(&w.from_i64(3)).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0], (w.quad_elem(1, -1), 2));
    }

    #[test]
    fn divisors_of_twelve() {
        let z = Ring::integers();
        let d: Vec<i64> = z
            .divisors(&z.from_i64(12))
            .unwrap()
            .iter()
            .map(|x| x.int().to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
