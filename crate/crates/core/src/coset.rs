//! Residue cosets `d+(l)` and exact linear combinations of their
//! indicators (the diagonal algebra at finite level).

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{Fraction, Ring, RingElement};
use crate::scalar::Scalar;

/// The set `base + (modulus)`, with `modulus` a canonical associate and
/// `base` its canonical residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    base: RingElement,
    modulus: RingElement,
}

/// `{r : a*r ≡ c mod n}`, `n != 0`.
pub(crate) fn solve_linear(ring: &Ring, a: &RingElement, c: &RingElement, n: &RingElement) -> Option<Coset> {
    if ring.is_zero(a) {
        return ring.divides(n, c).then(|| Coset::full(ring));
    }
    let (g, s, _) = ring.xgcd(a, n).expect("a != 0");
    let cg = ring.exact_div(c, &g)?;
    let modulus = ring.exact_div(n, &g).unwrap();
    Some(Coset::new(ring, ring.mul(&s, &cg), modulus).unwrap())
}

impl Coset {
    pub fn new(ring: &Ring, base: RingElement, modulus: RingElement) -> Result<Coset> {
        if ring.is_zero(&modulus) {
            return Err(Error::DegenerateModulus);
        }
        let modulus = ring.canonical(&modulus);
        let base = ring.reduce(&base, &modulus);
        Ok(Coset { base, modulus })
    }

    /// `R = 0+(1)`.
    pub fn full(ring: &Ring) -> Coset {
        Coset { base: ring.zero(), modulus: ring.one() }
    }

    /// The ideal `(m) = 0+(m)`.
    pub fn ideal(ring: &Ring, m: &RingElement) -> Result<Coset> {
        Coset::new(ring, ring.zero(), m.clone())
    }

    pub fn base(&self) -> &RingElement {
        &self.base
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    pub fn is_full(&self, ring: &Ring) -> bool {
        ring.is_one(&self.modulus)
    }

    pub fn contains(&self, ring: &Ring, r: &RingElement) -> bool {
        ring.congruent(r, &self.base, &self.modulus)
    }

    pub fn is_subset(&self, ring: &Ring, other: &Coset) -> bool {
        ring.divides(&other.modulus, &self.modulus) && other.contains(ring, &self.base)
    }

    /// `(d+(l)) ∩ (d'+(l'))`: empty or a coset mod `lcm(l, l')`.
    pub fn intersect(&self, ring: &Ring, other: &Coset) -> Option<Coset> {
        // d + l*t ∈ d' + (l')  <=>  l*t ≡ d' - d mod l'
        let t = solve_linear(ring, &self.modulus, &ring.sub(&other.base, &self.base), &other.modulus)?;
        let base = ring.add(&self.base, &ring.mul(&self.modulus, &t.base));
        Some(Coset::new(ring, base, ring.lcm(&self.modulus, &other.modulus)).unwrap())
    }

    /// The cosets mod `level` partitioning `self`, in residue order.
    pub fn refine(&self, ring: &Ring, level: &RingElement) -> Result<Vec<Coset>> {
        let q = ring.exact_div(level, &self.modulus).ok_or_else(|| {
            Error::RefinementMismatch(format!(
                "{} does not divide {}",
                ring.show(&self.modulus),
                ring.show(level)
            ))
        })?;
        let mut out: Vec<Coset> = ring
            .residues(&q)?
            .into_iter()
            .map(|t| Coset::new(ring, ring.add(&self.base, &ring.mul(&self.modulus, &t)), level.clone()).unwrap())
            .collect();
        out.sort();
        Ok(out)
    }

    /// `k + self`.
    pub fn translate(&self, ring: &Ring, k: &RingElement) -> Coset {
        Coset::new(ring, ring.add(&self.base, k), self.modulus.clone()).unwrap()
    }

    /// `m * self = m*d + (m*l)`, `m != 0`.
    pub fn scale(&self, ring: &Ring, m: &RingElement) -> Coset {
        Coset::new(ring, ring.mul(m, &self.base), ring.mul(m, &self.modulus)).unwrap()
    }

    /// `a*self + b`; must lie inside `R`.
    pub fn image(&self, ring: &Ring, a: &Fraction, b: &Fraction) -> Result<Coset> {
        if a.is_zero(ring) {
            return Err(Error::DegenerateInput("affine map with a = 0".into()));
        }
        let base = a.mul(ring, &Fraction::integer(ring, self.base.clone())).add(ring, b);
        let step = a.mul(ring, &Fraction::integer(ring, self.modulus.clone()));
        match (base.to_integral(ring), step.to_integral(ring)) {
            (Some(d), Some(l)) => Coset::new(ring, d, l),
            _ => Err(Error::NotIntegral(format!(
                "{}*({}) + {}",
                a.show(ring),
                self.show(ring),
                b.show(ring)
            ))),
        }
    }

    /// `{r ∈ R : a*r + b ∈ self}`.
    pub fn preimage(&self, ring: &Ring, a: &Fraction, b: &Fraction) -> Result<Option<Coset>> {
        if a.is_zero(ring) {
            return Err(Error::DegenerateInput("affine map with a = 0".into()));
        }
        // clear denominators: D*a*r ≡ D*(d - b) mod D*l
        let d = ring.lcm(a.den(), b.den());
        let da = ring.exact_div(&ring.mul(&d, a.num()), a.den()).unwrap();
        let db = ring.exact_div(&ring.mul(&d, b.num()), b.den()).unwrap();
        let rhs = ring.sub(&ring.mul(&d, &self.base), &db);
        Ok(solve_linear(ring, &da, &rhs, &ring.mul(&d, &self.modulus)))
    }

    pub fn show(&self, ring: &Ring) -> String {
        format!("{}+({})", ring.show(&self.base), ring.show(&self.modulus))
    }
}

/// A finite linear combination `Σ c_j * 1_{coset_j}`.
///
/// Values produced by the arithmetic below are always in normal form: all
/// cosets share the smallest modulus at which the function is periodic,
/// are pairwise disjoint, and carry nonzero coefficients. Normal forms are
/// therefore equal iff the functions are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorCombination {
    terms: BTreeMap<Coset, Scalar>,
}

impl IndicatorCombination {
    pub fn zero() -> Self {
        IndicatorCombination { terms: BTreeMap::new() }
    }

    pub fn indicator(c: Coset) -> Self {
        IndicatorCombination { terms: BTreeMap::from([(c, Scalar::one())]) }
    }

    pub fn constant(ring: &Ring, v: Scalar) -> Self {
        Self::from_terms(ring, [(Coset::full(ring), v)])
    }

    /// Normal form of an arbitrary combination (cosets may overlap or
    /// repeat).
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Coset, Scalar)>) -> Self {
        normalize(ring, terms.into_iter().collect())
    }

    pub fn terms(&self) -> &BTreeMap<Coset, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common modulus of the normal form (`None` for zero).
    pub fn level(&self) -> Option<&RingElement> {
        self.terms.keys().next().map(Coset::modulus)
    }

    pub fn add(&self, ring: &Ring, o: &Self) -> Self {
        let all = self.terms.iter().chain(&o.terms).map(|(c, v)| (c.clone(), v.clone()));
        Self::from_terms(ring, all)
    }

    pub fn scale(&self, v: &Scalar) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(c, w)| (c.clone(), w * v)).collect();
        IndicatorCombination { terms }
    }

    pub fn mul(&self, ring: &Ring, o: &Self) -> Self {
        let mut raw = Vec::new();
        for (c1, v1) in &self.terms {
            for (c2, v2) in &o.terms {
                if let Some(c) = c1.intersect(ring, c2) {
                    raw.push((c, v1 * v2));
                }
            }
        }
        Self::from_terms(ring, raw)
    }

    pub fn conj(&self) -> Self {
        let terms = self.terms.iter().map(|(c, v)| (c.clone(), v.conj())).collect();
        IndicatorCombination { terms }
    }

    /// `‖x‖²` in the sup norm, exact.
    pub fn sup_norm_sq(&self) -> BigRational {
        self.terms
            .values()
            .map(Scalar::norm_sq)
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Value at the point `r` of `R`.
    pub fn value_at(&self, ring: &Ring, r: &RingElement) -> Scalar {
        // normal-form cosets are disjoint
        self.terms
            .iter()
            .find(|(c, _)| c.contains(ring, r))
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Value of the associated function on `R/(level)` at `point`.
    pub fn gelfand_eval(&self, ring: &Ring, level: &RingElement, point: &RingElement) -> Result<Scalar> {
        if let Some(l) = self.level() {
            if !ring.divides(l, level) {
                return Err(Error::RefinementMismatch(format!(
                    "modulus {} does not divide level {}",
                    ring.show(l),
                    ring.show(level)
                )));
            }
        }
        Ok(self.value_at(ring, point))
    }

    /// Values on every residue mod `level` (which must be a multiple of the
    /// normal-form level), zeros omitted.
    pub fn atoms_at(&self, ring: &Ring, level: &RingElement) -> Result<BTreeMap<RingElement, Scalar>> {
        let mut out = BTreeMap::new();
        for (c, v) in &self.terms {
            for a in c.refine(ring, level)? {
                out.insert(a.base, v.clone());
            }
        }
        Ok(out)
    }

    pub fn show(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, v)| format!("{v}*p[{}]", c.show(ring)))
            .collect();
        parts.join(" + ")
    }
}

fn normalize(ring: &Ring, raw: Vec<(Coset, Scalar)>) -> IndicatorCombination {
    let raw: Vec<_> = raw.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    if raw.is_empty() {
        return IndicatorCombination::zero();
    }
    if raw.len() == 1 {
        // a single indicator is already minimal-period
        return IndicatorCombination { terms: raw.into_iter().collect() };
    }
    let mut level = raw.iter().fold(ring.one(), |acc, (c, _)| ring.lcm(&acc, &c.modulus));
    let mut atoms: BTreeMap<RingElement, Scalar> = BTreeMap::new();
    for (c, v) in &raw {
        if c.modulus == level {
            *atoms.entry(c.base.clone()).or_insert_with(Scalar::zero) += v;
            continue;
        }
        for a in c.refine(ring, &level).expect("lcm is a multiple") {
            *atoms.entry(a.base).or_insert_with(Scalar::zero) += v;
        }
    }
    atoms.retain(|_, v| !v.is_zero());

    // coarsen while the function is invariant under (level/p) for a prime p;
    // the subgroup has N(p) elements, so only primes with N(p) <= #atoms can
    // qualify
    'coarsen: while !atoms.is_empty() && !ring.is_unit(&level) {
        let bound = atoms.len() as u64;
        if bound < 2 {
            break;
        }
        let primes = if bound <= 64 {
            ring.small_prime_divisors(&level, bound)
        } else {
            ring.prime_divisors(&level)
        };
        for p in primes {
            if ring.norm_u64(&p) > bound {
                continue;
            }
            let coarse = ring.exact_div(&level, &p).unwrap();
            let shifts: Vec<RingElement> = ring
                .additive_generators_mod(&p)
                .iter()
                .map(|g| ring.mul(&coarse, g))
                .collect();
            let invariant = atoms.iter().all(|(x, v)| {
                shifts
                    .iter()
                    .all(|h| atoms.get(&ring.reduce(&ring.add(x, h), &level)) == Some(v))
            });
            if invariant {
                let coarse = ring.canonical(&coarse);
                atoms = atoms.into_iter().map(|(x, v)| (ring.reduce(&x, &coarse), v)).collect();
                level = coarse;
                continue 'coarsen;
            }
        }
        break;
    }
    let terms = atoms
        .into_iter()
        .map(|(x, v)| (Coset { base: x, modulus: level.clone() }, v))
        .collect();
    IndicatorCombination { terms }
}
