//! Finite truncations of the profinite completion, the adele space built
//! from it by inverting non-zero elements, and the `ax+b` action on cosets.
//!
//! A level set is a finite set of canonical moduli closed under taking
//! non-unit divisors; the inverse limit over it is `R/(lcm)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::ring::{Fraction, Ring, RingElement};

/// Canonicalizes and checks a level set.
pub fn level_set(ring: &Ring, levels: &[RingElement]) -> Result<Vec<RingElement>> {
    if levels.is_empty() {
        return Err(Error::DegenerateInput("empty level set".into()));
    }
    let mut set = BTreeSet::new();
    for l in levels {
        if ring.is_zero(l) {
            return Err(Error::DegenerateModulus);
        }
        set.insert(ring.canonical(l));
    }
    for l in &set {
        for d in ring.divisors(l)? {
            if !ring.is_unit(&d) && !set.contains(&d) {
                return Err(Error::DegenerateInput(format!(
                    "level set is not divisor-closed: {} divides {}",
                    ring.show(&d),
                    ring.show(l)
                )));
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// All non-unit canonical divisors of `m` (plus `m` itself).
pub fn divisor_closure(ring: &Ring, m: &RingElement) -> Result<Vec<RingElement>> {
    let mut out: Vec<RingElement> = ring.divisors(m)?.into_iter().filter(|d| !ring.is_unit(d)).collect();
    if out.is_empty() {
        out.push(ring.one());
    }
    Ok(out)
}

/// Compatible residues `x_m ∈ R/(m)` over a level set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerElement {
    data: BTreeMap<RingElement, RingElement>,
}

impl TowerElement {
    /// Checks that `x_{lm} ≡ x_m mod m` whenever both levels are present.
    pub fn new(ring: &Ring, data: BTreeMap<RingElement, RingElement>) -> Result<TowerElement> {
        let levels: Vec<RingElement> = data.keys().cloned().collect();
        let levels = level_set(ring, &levels)?;
        let data: BTreeMap<_, _> = data
            .into_iter()
            .map(|(m, x)| {
                let m = ring.canonical(&m);
                let x = ring.reduce(&x, &m);
                (m, x)
            })
            .collect();
        for big in &levels {
            for small in &levels {
                if small != big && ring.divides(small, big) && !ring.congruent(&data[big], &data[small], small) {
                    return Err(Error::IncompatibleFamily(format!(
                        "{} mod {} does not reduce to {} mod {}",
                        ring.show(&data[big]),
                        ring.show(big),
                        ring.show(&data[small]),
                        ring.show(small)
                    )));
                }
            }
        }
        Ok(TowerElement { data })
    }

    pub fn levels(&self) -> impl Iterator<Item = &RingElement> {
        self.data.keys()
    }

    pub fn data(&self) -> &BTreeMap<RingElement, RingElement> {
        &self.data
    }

    /// Residue at level `m`.
    pub fn at(&self, m: &RingElement) -> Option<&RingElement> {
        self.data.get(m)
    }

    fn zip(&self, ring: &Ring, o: &Self, f: impl Fn(&RingElement, &RingElement) -> RingElement) -> Result<Self> {
        let mut data = BTreeMap::new();
        for (m, x) in &self.data {
            if let Some(y) = o.data.get(m) {
                data.insert(m.clone(), ring.reduce(&f(x, y), m));
            }
        }
        if data.is_empty() {
            return Err(Error::RefinementMismatch("no common levels".into()));
        }
        Ok(TowerElement { data })
    }

    /// Levelwise sum on the common levels.
    pub fn add(&self, ring: &Ring, o: &Self) -> Result<Self> {
        self.zip(ring, o, |x, y| ring.add(x, y))
    }

    pub fn mul(&self, ring: &Ring, o: &Self) -> Result<Self> {
        self.zip(ring, o, |x, y| ring.mul(x, y))
    }

    pub fn scale(&self, ring: &Ring, r: &RingElement) -> Self {
        let data = self.data.iter().map(|(m, x)| (m.clone(), ring.reduce(&ring.mul(r, x), m))).collect();
        TowerElement { data }
    }

    pub fn show(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self
            .data
            .iter()
            .map(|(m, x)| format!("{} mod {}", ring.show(x), ring.show(m)))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Diagonal image of `r` in the truncation over `levels`.
pub fn tower_embed(ring: &Ring, r: &RingElement, levels: &[RingElement]) -> Result<TowerElement> {
    Ok(embed_checked_levels(ring, r, &level_set(ring, levels)?))
}

fn embed_checked_levels(ring: &Ring, r: &RingElement, levels: &[RingElement]) -> TowerElement {
    let data = levels.iter().map(|m| (m.clone(), ring.reduce(r, m)));
    TowerElement { data: data.collect() }
}

/// Outcome of [`quotient_iso_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub l: RingElement,
    /// `lcm` of the level set; the truncation is `R/(lcm)`.
    pub top: RingElement,
    /// Induced bijection: residue mod `l` ↦ size of its fibre.
    pub fibres: BTreeMap<RingElement, BigUint>,
    pub injective_embedding: bool,
    pub surjective: bool,
    pub homomorphism: bool,
    pub kernel_ok: bool,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.injective_embedding && self.surjective && self.homomorphism && self.kernel_ok
    }
}

/// Checks that projecting the truncation to level `l` is a surjective ring
/// homomorphism onto `R/(l)` whose kernel is `l` times the truncation.
pub fn quotient_iso_check(ring: &Ring, l: &RingElement, levels: &[RingElement]) -> Result<QuotientReport> {
    let levels = level_set(ring, levels)?;
    let l = ring.canonical(l);
    if !levels.contains(&l) {
        return Err(Error::RefinementMismatch(format!("level {} is not available", ring.show(&l))));
    }
    let top = levels.iter().fold(ring.one(), |acc, m| ring.lcm(&acc, m));
    let points = ring.residues(&top)?;
    let towers: Vec<TowerElement> = points.iter().map(|r| embed_checked_levels(ring, r, &levels)).collect();
    let injective_embedding = towers.iter().collect::<BTreeSet<_>>().len() == towers.len();

    let proj = |t: &TowerElement| t.at(&l).cloned().expect("l is a level");
    let mut fibres: BTreeMap<RingElement, BigUint> = BTreeMap::new();
    for t in &towers {
        *fibres.entry(proj(t)).or_default() += 1u32;
    }
    let residues: BTreeSet<RingElement> = ring.residues(&l)?.into_iter().collect();
    let surjective = fibres.keys().cloned().collect::<BTreeSet<_>>() == residues;

    // all pairs when small, otherwise a fixed stride through them
    let n = towers.len();
    let stride = if n <= 24 { 1 } else { n / 24 + 1 };
    let mut homomorphism = true;
    for i in (0..n).step_by(stride) {
        for j in (0..n).step_by(stride) {
            let (x, y) = (&towers[i], &towers[j]);
            let sum = proj(&x.add(ring, y)?);
            let prod = proj(&x.mul(ring, y)?);
            homomorphism &= ring.congruent(&sum, &ring.add(&proj(x), &proj(y)), &l)
                && ring.congruent(&prod, &ring.mul(&proj(x), &proj(y)), &l);
        }
    }

    // kernel = elements divisible by l at every level above l = l * truncation
    let kernel: BTreeSet<&TowerElement> = towers.iter().filter(|t| ring.is_zero(&proj(t))).collect();
    let divisible = towers.iter().filter(|t| {
        t.data()
            .iter()
            .filter(|(m, _)| ring.divides(&l, m))
            .all(|(_, x)| ring.divides(&l, x))
    });
    let divisible: BTreeSet<&TowerElement> = divisible.collect();
    let multiples: BTreeSet<TowerElement> = towers.iter().map(|t| t.scale(ring, &l)).collect();
    let kernel_ok = kernel == divisible
        && kernel.len() == multiples.len()
        && kernel.iter().all(|t| multiples.contains(*t));

    Ok(QuotientReport { l, top, fibres, injective_embedding, surjective, homomorphism, kernel_ok })
}

impl PartialOrd for TowerElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TowerElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.data.cmp(&other.data)
    }
}

/// `ι_l(x) = x / l` with `x` in a truncation of the completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdeleElement {
    level: RingElement,
    value: TowerElement,
}

impl AdeleElement {
    pub fn new(ring: &Ring, level: &RingElement, value: TowerElement) -> Result<AdeleElement> {
        if ring.is_zero(level) {
            return Err(Error::DegenerateModulus);
        }
        let (u, level) = ring.canonical_associate(level)?;
        // x / l = (u x) / (u l)
        let value = value.scale(ring, &u);
        Ok(AdeleElement { level, value }.canonicalize(ring))
    }

    /// `ι_l(r)` for `r ∈ R`.
    pub fn embed(ring: &Ring, level: &RingElement, r: &RingElement, levels: &[RingElement]) -> Result<AdeleElement> {
        AdeleElement::new(ring, level, tower_embed(ring, r, levels)?)
    }

    pub fn level(&self) -> &RingElement {
        &self.level
    }

    pub fn value(&self) -> &TowerElement {
        &self.value
    }

    /// Divides out primes `p` of the level for which the value lies in `p`
    /// times the truncation. Levels divisible by `p` lose one factor of `p`.
    fn canonicalize(mut self, ring: &Ring) -> AdeleElement {
        'outer: loop {
            if ring.is_unit(&self.level) {
                break;
            }
            for p in ring.prime_divisors(&self.level) {
                let data = self.value.data();
                let divisible = data
                    .iter()
                    .all(|(m, x)| !ring.divides(&p, m) || ring.divides(&p, x));
                if !divisible {
                    continue;
                }
                let mut shrunk = BTreeMap::new();
                for (m, x) in data {
                    if let Some(mp) = ring.exact_div(m, &p) {
                        let mp = ring.canonical(&mp);
                        let x = ring.reduce(&ring.exact_div(x, &p).expect("checked above"), &mp);
                        shrunk.insert(mp, x);
                    } else {
                        let inv = ring.inverse_mod(&p, m).expect("p is prime to m");
                        shrunk.insert(m.clone(), ring.reduce(&ring.mul(&inv, x), m));
                    }
                }
                // x / l = (u x) / (u l) with u l canonical
                let (u, level) = ring.canonical_associate(&ring.exact_div(&self.level, &p).unwrap()).unwrap();
                self.level = level;
                self.value = TowerElement { data: shrunk }.scale(ring, &u);
                continue 'outer;
            }
            break;
        }
        self
    }

    /// `ι_l(x) + ι_m(y) = ι_{lm}(m x + l y)`.
    pub fn add(&self, ring: &Ring, o: &Self) -> Result<Self> {
        let x = self.value.scale(ring, &o.level);
        let y = o.value.scale(ring, &self.level);
        AdeleElement::new(ring, &ring.mul(&self.level, &o.level), x.add(ring, &y)?)
    }

    /// `ι_l(x) ι_m(y) = ι_{lm}(x y)`.
    pub fn mul(&self, ring: &Ring, o: &Self) -> Result<Self> {
        AdeleElement::new(ring, &ring.mul(&self.level, &o.level), self.value.mul(ring, &o.value)?)
    }

    /// `ι_l(x) ~ ι_m(y)` iff `m x = l y` at every common level.
    pub fn equivalent(&self, ring: &Ring, o: &Self) -> bool {
        let x = self.value.scale(ring, &o.level);
        let y = o.value.scale(ring, &self.level);
        x.data().iter().all(|(m, a)| y.at(m).is_none_or(|b| a == b))
    }

    /// Agreement with the fraction `q` of `Q(R)`: `den(q) x = l num(q)`
    /// levelwise.
    pub fn matches_fraction(&self, ring: &Ring, q: &Fraction) -> bool {
        self.value.data().iter().all(|(m, x)| {
            ring.congruent(&ring.mul(q.den(), x), &ring.mul(&self.level, q.num()), m)
        })
    }

    pub fn show(&self, ring: &Ring) -> String {
        format!("iota_{}{}", ring.show(&self.level), self.value.show(ring))
    }
}

/// `r ↦ a r + b` with `a ∈ Q(R)^×`, `b ∈ Q(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxBElement {
    pub a: Fraction,
    pub b: Fraction,
}

impl AxBElement {
    pub fn new(ring: &Ring, a: Fraction, b: Fraction) -> Result<AxBElement> {
        if a.is_zero(ring) {
            return Err(Error::DegenerateInput("a = 0 in ax+b".into()));
        }
        Ok(AxBElement { a, b })
    }

    pub fn identity(ring: &Ring) -> AxBElement {
        AxBElement { a: Fraction::integer(ring, ring.one()), b: Fraction::integer(ring, ring.zero()) }
    }

    /// `self ∘ o`.
    pub fn compose(&self, ring: &Ring, o: &Self) -> AxBElement {
        AxBElement { a: self.a.mul(ring, &o.a), b: self.a.mul(ring, &o.b).add(ring, &self.b) }
    }

    pub fn inverse(&self, ring: &Ring) -> AxBElement {
        let a = self.a.inv(ring).expect("a != 0");
        AxBElement { b: a.mul(ring, &self.b).neg(ring), a }
    }

    pub fn is_integral(&self, ring: &Ring) -> bool {
        self.a.is_integral(ring) && self.b.is_integral(ring)
    }
}

/// The compact open set `(1/q) (d + (l))` of the adele space; `q = 1` for
/// cosets of the completion itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeleCoset {
    pub level: RingElement,
    pub coset: Coset,
}

impl AdeleCoset {
    pub fn integral(ring: &Ring, c: Coset) -> AdeleCoset {
        AdeleCoset { level: ring.one(), coset: c }
    }

    /// Reduced form: no prime divides `q`, `l` and `d` at once.
    fn reduced(ring: &Ring, q: RingElement, base: RingElement, modulus: RingElement) -> AdeleCoset {
        let (u, mut q) = ring.canonical_associate(&q).expect("q != 0");
        let (mut d, mut l) = (ring.mul(&u, &base), ring.mul(&u, &modulus));
        'outer: loop {
            for p in ring.prime_divisors(&q) {
                if ring.divides(&p, &l) && ring.divides(&p, &d) {
                    // (1/(q/p)) x = (1/(v q/p)) (v x) with v q/p canonical
                    let (v, qc) = ring.canonical_associate(&ring.exact_div(&q, &p).unwrap()).unwrap();
                    q = qc;
                    l = ring.mul(&v, &ring.exact_div(&l, &p).unwrap());
                    d = ring.mul(&v, &ring.exact_div(&d, &p).unwrap());
                    continue 'outer;
                }
            }
            break;
        }
        AdeleCoset { level: q, coset: Coset::new(ring, d, l).unwrap() }
    }

    pub fn show(&self, ring: &Ring) -> String {
        if ring.is_one(&self.level) {
            self.coset.show(ring)
        } else {
            format!("(1/{})({})", ring.show(&self.level), self.coset.show(ring))
        }
    }
}

/// `g · c = a c + b`, written as `(1/q)(d' + (l'))` with
/// `q = lcm(den a, den b)`, `d' = q(a d + b)`, `l' = q a l`.
pub fn axb_act(ring: &Ring, g: &AxBElement, c: &Coset) -> AdeleCoset {
    let q = ring.lcm(g.a.den(), g.b.den());
    let qf = Fraction::integer(ring, q.clone());
    let int = |f: Fraction| f.to_integral(ring).expect("q clears denominators");
    let d = int(qf.mul(ring, &g.a.mul(ring, &Fraction::integer(ring, c.base().clone())).add(ring, &g.b)));
    let l = int(qf.mul(ring, &g.a).mul(ring, &Fraction::integer(ring, c.modulus().clone())));
    AdeleCoset::reduced(ring, q, d, l)
}

/// Action on a general adele coset: `g · (1/q) c = (g ∘ (1/q)) · c`.
pub fn axb_act_adele(ring: &Ring, g: &AxBElement, c: &AdeleCoset) -> AdeleCoset {
    let shrink = AxBElement {
        a: Fraction::new(ring, ring.one(), c.level.clone()).unwrap(),
        b: Fraction::integer(ring, ring.zero()),
    };
    axb_act(ring, &g.compose(ring, &shrink), &c.coset)
}
