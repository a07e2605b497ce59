use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coset::{Coset, IndicatorCombination};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::scalar::Scalar;

use super::monomial::{AffineKey, Monomial};

/// Generators of the regular algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    S(RingElement),
    SStar(RingElement),
    U(RingElement),
    /// `e_m = s_m s_m*`
    E(RingElement),
    /// Coset projection `u^d e_l u^{-d}`.
    P(Coset),
    /// `(a, b) ↦ u^b s_a`
    Axb(RingElement, RingElement),
}

/// A finite combination of canonical monomials.
///
/// Terms sharing an affine part are merged by bringing their cosets into
/// indicator normal form, so two elements are equal iff they act equally on
/// `ℓ²(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero(ring: &Ring) -> Self {
        AlgebraElement { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Scalar::one())
    }

    pub fn constant(ring: &Ring, v: Scalar) -> Self {
        Self::from_terms(ring, [(Self::identity_monomial(ring), v)])
    }

    fn identity_monomial(ring: &Ring) -> Monomial {
        Monomial::from_key(&(ring.one(), ring.zero(), ring.one()), Coset::full(ring))
    }

    pub fn monomial(ring: &Ring, t: Monomial) -> Self {
        Self::from_terms(ring, [(t, Scalar::one())])
    }

    /// Normal form of an arbitrary list of canonical monomials.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut groups: BTreeMap<AffineKey, Vec<(Coset, Scalar)>> = BTreeMap::new();
        for (t, v) in terms {
            if !v.is_zero() {
                groups.entry(t.key()).or_default().push((t.c().clone(), v));
            }
        }
        let mut out = BTreeMap::new();
        for (key, cosets) in groups {
            let domain = IndicatorCombination::from_terms(ring, cosets);
            for (c, v) in domain.terms() {
                out.insert(Monomial::from_key(&key, c.clone()), v.clone());
            }
        }
        AlgebraElement { ring: ring.clone(), terms: out }
    }

    /// `Σ v_j p_{c_j}` for a diagonal combination.
    pub fn diagonal(ring: &Ring, d: &IndicatorCombination) -> Self {
        let one = Self::identity_monomial(ring);
        let terms = d.terms().iter().map(|(c, v)| (one.with_coset(c.clone()), v.clone()));
        AlgebraElement { ring: ring.clone(), terms: terms.collect() }
    }

    pub fn generator(ring: &Ring, g: &Generator) -> Result<Self> {
        let one = ring.one();
        let zero = ring.zero();
        let full = Coset::full(ring);
        let raw = match g {
            Generator::S(m) => Monomial::normalize(ring, &one, &full, &zero, m)?,
            Generator::SStar(m) => Monomial::normalize(ring, m, &full, &zero, &one)?,
            Generator::U(n) => Monomial::normalize(ring, &one, &full, n, &one)?,
            Generator::E(m) => Monomial::normalize(ring, &one, &Coset::ideal(ring, m)?, &zero, &one)?,
            Generator::P(c) => Monomial::normalize(ring, &one, c, &zero, &one)?,
            Generator::Axb(a, b) => Monomial::normalize(ring, &one, &full, b, a)?,
        };
        let t = raw.expect("generators are nonzero");
        Ok(Self::monomial(ring, t))
    }

    pub fn s(ring: &Ring, m: &RingElement) -> Result<Self> {
        Self::generator(ring, &Generator::S(m.clone()))
    }

    pub fn s_star(ring: &Ring, m: &RingElement) -> Result<Self> {
        Self::generator(ring, &Generator::SStar(m.clone()))
    }

    pub fn u(ring: &Ring, n: &RingElement) -> Self {
        Self::generator(ring, &Generator::U(n.clone())).unwrap()
    }

    pub fn e(ring: &Ring, m: &RingElement) -> Result<Self> {
        Self::generator(ring, &Generator::E(m.clone()))
    }

    pub fn p(ring: &Ring, c: &Coset) -> Self {
        Self::generator(ring, &Generator::P(c.clone())).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_ring(&self, o: &Self) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch { left: self.ring.name(), right: o.ring.name() });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        let all = self.terms.iter().chain(&o.terms).map(|(t, v)| (t.clone(), v.clone()));
        Ok(Self::from_terms(&self.ring, all))
    }

    pub fn scale(&self, v: &Scalar) -> Self {
        if v.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, w)| (t.clone(), w * v)).collect();
        AlgebraElement { ring: self.ring.clone(), terms }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (t1, v1) in &self.terms {
            for (t2, v2) in &o.terms {
                if let Some(t) = t1.compose(&self.ring, t2) {
                    raw.push((t, v1 * v2));
                }
            }
        }
        Ok(Self::from_terms(&self.ring, raw))
    }

    /// Product through the word-rewriting path instead of map composition.
    pub fn mul_rewrite(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        let mut raw = Vec::new();
        for (t1, v1) in &self.terms {
            for (t2, v2) in &o.terms {
                if let Some(t) = t1.product_rewrite(&self.ring, t2) {
                    raw.push((t, v1 * v2));
                }
            }
        }
        Ok(Self::from_terms(&self.ring, raw))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ring), |acc, _| &acc * self)
    }

    pub fn adjoint(&self) -> Self {
        let terms = self.terms.iter().map(|(t, v)| (t.adjoint(&self.ring), v.conj()));
        Self::from_terms(&self.ring, terms)
    }

    pub fn is_self_adjoint(&self) -> bool {
        &self.adjoint() == self
    }

    /// Terms acting as `r ↦ r`, as a function on `R`.
    pub fn diagonal_part(&self) -> IndicatorCombination {
        let terms = self
            .terms
            .iter()
            .filter(|(t, _)| t.is_diagonal(&self.ring))
            .map(|(t, v)| (t.c().clone(), v.clone()));
        IndicatorCombination::from_terms(&self.ring, terms)
    }

    pub(crate) fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(t, _)| keep(t)).map(|(t, v)| (t.clone(), v.clone()));
        AlgebraElement { ring: self.ring.clone(), terms: terms.collect() }
    }

    /// Printed in the expression grammar, e.g. `u[1] s[2] + 1/2*p[1+(2)]`.
    pub fn show(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (j, (t, v)) in self.terms.iter().enumerate() {
            let word = t.show(&self.ring);
            let (neg, v) = if v.is_real() && v.re < num_traits::Zero::zero() { (true, -v) } else { (false, v.clone()) };
            if j > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            match (v.is_one(), word == "1") {
                (true, _) => out.push_str(&word),
                (false, true) => out.push_str(&v.to_string()),
                (false, false) => {
                    out.push_str(&v.to_string());
                    out.push('*');
                    out.push_str(&word);
                }
            }
        }
        out
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_add(o).expect("ring mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_add(&-o).expect("ring mismatch")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_mul(o).expect("ring mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::integers()
    }

    fn n(x: i64) -> RingElement {
        z().from_i64(x)
    }

    fn cz(d: i64, l: i64) -> Coset {
        Coset::new(&z(), n(d), n(l)).unwrap()
    }

    #[test]
    fn embeddings() {
        let r = z();
        let s2 = AlgebraElement::s(&r, &n(2)).unwrap();
        let (t, _) = s2.terms().iter().next().unwrap();
        assert_eq!((t.m(), t.c(), t.k(), t.mp()), (&n(1), &cz(0, 2), &n(0), &n(2)));
        let axb = AlgebraElement::generator(&r, &Generator::Axb(n(2), n(1))).unwrap();
        assert_eq!(axb, &AlgebraElement::u(&r, &n(1)) * &s2);
        let (t, _) = axb.terms().iter().next().unwrap();
        assert_eq!(t.c(), &cz(1, 2));
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        assert_eq!(e2, &s2 * &AlgebraElement::s_star(&r, &n(2)).unwrap());
        assert!(matches!(AlgebraElement::s(&r, &n(0)), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn products() {
        let r = z();
        let s = |m| AlgebraElement::s(&r, &n(m)).unwrap();
        let ss = |m| AlgebraElement::s_star(&r, &n(m)).unwrap();
        let u = |k| AlgebraElement::u(&r, &n(k));
        assert_eq!(&s(2) * &s(3), s(6));
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        assert!((&e2 * &(&(&u(1) * &e2) * &u(-1))).is_zero());
        assert_eq!(&(&ss(2) * &u(4)) * &s(2), u(2));
        assert!((&(&ss(2) * &u(3)) * &s(2)).is_zero());

        let g = Ring::gaussian();
        let p = g.quad_elem(1, 1);
        let x = &(&AlgebraElement::s_star(&g, &p).unwrap() * &AlgebraElement::u(&g, &g.one()))
            * &AlgebraElement::s(&g, &p).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn partition_of_unity_merges() {
        let r = z();
        let sum = (0..3).fold(AlgebraElement::zero(&r), |acc, d| &acc + &AlgebraElement::p(&r, &cz(d, 3)));
        assert_eq!(sum, AlgebraElement::one(&r));
        assert_eq!(sum.show(), "1");
    }

    #[test]
    fn adjoints() {
        let r = z();
        let x = AlgebraElement::generator(&r, &Generator::Axb(n(2), n(1))).unwrap();
        let want = &AlgebraElement::s_star(&r, &n(2)).unwrap() * &AlgebraElement::u(&r, &n(-1));
        assert_eq!(x.adjoint(), want);
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        assert_eq!(e2.adjoint(), e2);
        let y = AlgebraElement::from_terms(
            &r,
            [(Monomial::normalize(&r, &n(3), &cz(0, 1), &n(1), &n(2)).unwrap().unwrap(), Scalar::i())],
        );
        assert_eq!(y.adjoint().adjoint(), y);
    }

    #[test]
    fn show_forms() {
        let r = z();
        let x = &AlgebraElement::u(&r, &n(1)) * &AlgebraElement::s(&r, &n(2)).unwrap();
        assert_eq!(x.show(), "u[1] s[2]");
        let y = AlgebraElement::one(&r).scale(&Scalar::from_int(-1));
        assert_eq!(y.show(), "-1");
        let w = &AlgebraElement::one(&r) - &AlgebraElement::e(&r, &n(2)).unwrap();
        assert_eq!(w.show(), "p[1+(2)]");
    }
}
