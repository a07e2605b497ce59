//! Seeded random inputs for audits, property checks and benchmarks.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::coset::{Coset, IndicatorCombination};
use crate::ring::{Ring, RingElement, RingKind};
use crate::scalar::Scalar;
use crate::star::{AlgebraElement, Monomial};

/// A small modulus with several prime factors, norm at most 12.
pub fn base_modulus(ring: &Ring) -> RingElement {
    let b = match ring.kind() {
        RingKind::Integers => ring.from_i64(12),
        // (1+i)(2+i), norm 10
        RingKind::GaussianIntegers => ring.quad_elem(1, 3),
        // 2(1-w), norm 12
        RingKind::EisensteinIntegers => ring.quad_elem(2, -2),
        // T(T+1), or T^2 when q > 12
        RingKind::PolynomialsOverFq(q) if q * q <= 12 => ring.poly_elem(&[0, 1, 1]),
        RingKind::PolynomialsOverFq(_) => ring.generator(),
    };
    ring.canonical(&b)
}

/// Draws indices, shifts and moduli from fixed finite pools.
#[derive(Debug, Clone)]
pub struct Sampler {
    pub ring: Ring,
    /// Isometry indices `m`, `m'` (units included).
    pub slopes: Vec<RingElement>,
    pub shifts: Vec<RingElement>,
    /// Coset moduli.
    pub moduli: Vec<RingElement>,
}

impl Sampler {
    /// Slopes and moduli among the divisors of `base`, shifts of norm at most
    /// `shift_norm`.
    pub fn new(ring: &Ring, base: &RingElement, shift_norm: u64) -> Sampler {
        let divisors = ring.divisors(base).expect("nonzero base");
        let mut slopes = divisors.clone();
        for u in ring.units() {
            if !ring.is_one(&u) {
                slopes.push(u);
            }
        }
        Sampler {
            ring: ring.clone(),
            slopes,
            shifts: ring.elements_up_to_norm(shift_norm),
            moduli: divisors,
        }
    }

    /// `Sampler::new(ring, base_modulus(ring), 12)`.
    pub fn standard(ring: &Ring) -> Sampler {
        Sampler::new(ring, &base_modulus(ring), 12)
    }

    pub fn element<R: Rng>(&self, rng: &mut R) -> RingElement {
        self.shifts.choose(rng).unwrap().clone()
    }

    pub fn coset<R: Rng>(&self, rng: &mut R) -> Coset {
        let l = self.moduli.choose(rng).unwrap().clone();
        Coset::new(&self.ring, self.element(rng), l).unwrap()
    }

    /// A nonzero canonical monomial `s_m* p_c u^k s_{m'}`.
    pub fn monomial<R: Rng>(&self, rng: &mut R) -> Monomial {
        loop {
            let m = self.slopes.choose(rng).unwrap();
            let mp = self.slopes.choose(rng).unwrap();
            let k = self.element(rng);
            let c = self.coset(rng);
            if let Some(t) = Monomial::normalize(&self.ring, m, &c, &k, mp).unwrap() {
                return t;
            }
        }
    }

    /// A nonzero diagonal monomial `p_c`.
    pub fn projection<R: Rng>(&self, rng: &mut R) -> Monomial {
        let one = self.ring.one();
        Monomial::normalize(&self.ring, &one, &self.coset(rng), &self.ring.zero(), &one)
            .unwrap()
            .expect("cosets are nonempty")
    }

    /// `±a/b` with `1 <= a, b <= 4`, or occasionally a Gaussian rational.
    pub fn scalar<R: Rng>(&self, rng: &mut R) -> Scalar {
        let re = Scalar::ratio(rng.random_range(-4..=4), rng.random_range(1..=4));
        if rng.random_bool(0.2) {
            &re + &(&Scalar::i() * &Scalar::ratio(rng.random_range(-4..=4), rng.random_range(1..=4)))
        } else {
            re
        }
    }

    /// Up to `max_terms` random monomials with random coefficients.
    pub fn algebra_element<R: Rng>(&self, rng: &mut R, max_terms: usize) -> AlgebraElement {
        let n = rng.random_range(1..=max_terms);
        let terms: Vec<_> = (0..n).map(|_| (self.monomial(rng), self.scalar(rng))).collect();
        AlgebraElement::from_terms(&self.ring, terms)
    }

    /// Values in `[1/2, 1]` on every residue mod a random modulus, with the
    /// value `1` attained; bounded below by `1/2`.
    pub fn diagonal_weight<R: Rng>(&self, rng: &mut R) -> IndicatorCombination {
        let ring = &self.ring;
        let l = self.moduli.choose(rng).unwrap();
        let residues = ring.residues(l).unwrap();
        let top = rng.random_range(0..residues.len());
        let terms = residues.into_iter().enumerate().map(|(i, n)| {
            let v = if i == top { Scalar::one() } else { Scalar::ratio(rng.random_range(2..=4), 4) };
            (Coset::new(ring, n, l.clone()).unwrap(), v)
        });
        IndicatorCombination::from_terms(ring, terms)
    }

    /// A non-diagonal monomial.
    pub fn off_diagonal<R: Rng>(&self, rng: &mut R) -> Monomial {
        loop {
            let t = self.monomial(rng);
            if !t.is_diagonal(&self.ring) {
                return t;
            }
        }
    }
}
