//! Concrete Euclidean domains with finite quotients: `Z`, `Z[i]`, `Z[w]` and
//! `F_q[T]`.
//!
//! A [`Ring`] is a lightweight descriptor; all arithmetic goes through its
//! methods. Elements are plain values ([`RingElement`]) whose encoding is
//! unique per ring element.

mod crt;
mod factor;
pub mod field;
mod fraction;
mod literal;
pub mod poly;
pub mod quadratic;

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
pub use crt::{CrtReport, CrtSplit};
pub use factor::Factorization;
use field::FiniteField;
pub use fraction::Fraction;
use quadratic::{Pair, Quad};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    GaussianIntegers,
    EisensteinIntegers,
    /// `F_q[T]` for a prime power `q <= 2^16`.
    PolynomialsOverFq(u32),
}

/// Descriptor of one of the supported rings.
#[derive(Clone)]
pub struct Ring {
    kind: RingKind,
    field: Option<Arc<FiniteField>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.name())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An element of one of the supported rings.
///
/// `Int` for `Z`, `Quad(a, b)` for `a + b*i` or `a + b*w`, `Poly` for
/// little-endian coefficient vectors without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    Int(BigInt),
    Quad(BigInt, BigInt),
    Poly(Vec<u32>),
}

impl RingElement {
    fn int(&self) -> &BigInt {
        match self {
            RingElement::Int(n) => n,
            other => panic!("expected an integer, got {other:?}"),
        }
    }

    fn pair(&self) -> Pair {
        match self {
            RingElement::Quad(a, b) => (a.clone(), b.clone()),
            other => panic!("expected a quadratic integer, got {other:?}"),
        }
    }

    fn poly(&self) -> &[u32] {
        match self {
            RingElement::Poly(p) => p,
            other => panic!("expected a polynomial, got {other:?}"),
        }
    }
}

fn from_pair(p: Pair) -> RingElement {
    RingElement::Quad(p.0, p.1)
}

impl Ring {
    pub fn integers() -> Ring {
        Ring { kind: RingKind::Integers, field: None }
    }

    pub fn gaussian() -> Ring {
        Ring { kind: RingKind::GaussianIntegers, field: None }
    }

    pub fn eisenstein() -> Ring {
        Ring { kind: RingKind::EisensteinIntegers, field: None }
    }

    pub fn poly_fq(q: u32) -> Result<Ring> {
        let field = FiniteField::new(q)?;
        Ok(Ring { kind: RingKind::PolynomialsOverFq(q), field: Some(Arc::new(field)) })
    }

    pub fn from_kind(kind: RingKind) -> Result<Ring> {
        Ok(match kind {
            RingKind::Integers => Ring::integers(),
            RingKind::GaussianIntegers => Ring::gaussian(),
            RingKind::EisensteinIntegers => Ring::eisenstein(),
            RingKind::PolynomialsOverFq(q) => Ring::poly_fq(q)?,
        })
    }

    /// Parse a ring flag: `z`, `zi`, `zw` or `fq:<q>`.
    pub fn from_flag(flag: &str) -> Result<Ring> {
        match flag {
            "z" => Ok(Ring::integers()),
            "zi" => Ok(Ring::gaussian()),
            "zw" => Ok(Ring::eisenstein()),
            other => match other.strip_prefix("fq:").map(str::parse::<u32>) {
                Some(Ok(q)) => Ring::poly_fq(q),
                _ => Err(Error::UnsupportedRing(format!("unknown ring flag '{other}'"))),
            },
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn flag(&self) -> String {
        match self.kind {
            RingKind::Integers => "z".into(),
            RingKind::GaussianIntegers => "zi".into(),
            RingKind::EisensteinIntegers => "zw".into(),
            RingKind::PolynomialsOverFq(q) => format!("fq:{q}"),
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            RingKind::Integers => "Z".into(),
            RingKind::GaussianIntegers => "Z[i]".into(),
            RingKind::EisensteinIntegers => "Z[w]".into(),
            RingKind::PolynomialsOverFq(q) => format!("F_{q}[T]"),
        }
    }

    /// Only `Z` has a real place; there "units" are `{1}` and nonzero
    /// elements are the positive integers for Bost–Connes purposes.
    pub fn positive_cone(&self) -> bool {
        self.kind == RingKind::Integers
    }

    /// Rings of integers of number fields (the Bost–Connes setting).
    pub fn is_number_ring(&self) -> bool {
        !matches!(self.kind, RingKind::PolynomialsOverFq(_))
    }

    pub fn field(&self) -> Option<&FiniteField> {
        self.field.as_deref()
    }

    fn fq(&self) -> &FiniteField {
        self.field.as_deref().expect("polynomial ring carries its coefficient field")
    }

    fn quad(&self) -> Option<Quad> {
        match self.kind {
            RingKind::GaussianIntegers => Some(Quad::Gaussian),
            RingKind::EisensteinIntegers => Some(Quad::Eisenstein),
            _ => None,
        }
    }

    /// Does the element's encoding belong to this ring?
    pub fn contains(&self, x: &RingElement) -> bool {
        match (self.kind, x) {
            (RingKind::Integers, RingElement::Int(_)) => true,
            (RingKind::GaussianIntegers | RingKind::EisensteinIntegers, RingElement::Quad(..)) => true,
            (RingKind::PolynomialsOverFq(q), RingElement::Poly(p)) => {
                p.iter().all(|&c| c < q) && p.last() != Some(&0)
            }
            _ => false,
        }
    }

    // ---- constructors -------------------------------------------------

    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> RingElement {
        match self.kind {
            RingKind::Integers => RingElement::Int(BigInt::from(n)),
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                RingElement::Quad(BigInt::from(n), BigInt::zero())
            }
            RingKind::PolynomialsOverFq(_) => RingElement::Poly(poly::constant(self.fq().from_i64(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> RingElement {
        match self.kind {
            RingKind::Integers => RingElement::Int(n.clone()),
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                RingElement::Quad(n.clone(), BigInt::zero())
            }
            RingKind::PolynomialsOverFq(_) => {
                let p = BigInt::from(self.fq().characteristic());
                let r = n.mod_floor(&p).to_i64().unwrap();
                RingElement::Poly(poly::constant(self.fq().from_i64(r)))
            }
        }
    }

    /// The ring generator over its prime ring: `i`, `w` or `T`; `1` for `Z`.
    pub fn generator(&self) -> RingElement {
        match self.kind {
            RingKind::Integers => self.one(),
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                RingElement::Quad(BigInt::zero(), BigInt::one())
            }
            RingKind::PolynomialsOverFq(_) => RingElement::Poly(poly::monomial_t()),
        }
    }

    /// `a + b*theta` for the quadratic rings.
    pub fn quad_elem(&self, a: i64, b: i64) -> RingElement {
        assert!(self.quad().is_some(), "quad_elem on a non-quadratic ring");
        RingElement::Quad(BigInt::from(a), BigInt::from(b))
    }

    /// Polynomial from little-endian coefficient indices.
    pub fn poly_elem(&self, coeffs: &[u32]) -> RingElement {
        let q = self.fq().order();
        RingElement::Poly(poly::trim(coeffs.iter().map(|&c| c % q).collect()))
    }

    // ---- arithmetic ---------------------------------------------------

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b) {
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x + y),
            (RingElement::Quad(a0, a1), RingElement::Quad(b0, b1)) => RingElement::Quad(a0 + b0, a1 + b1),
            (RingElement::Poly(x), RingElement::Poly(y)) => RingElement::Poly(poly::add(self.fq(), x, y)),
            _ => panic!("mixed encodings {a:?} + {b:?}"),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        match a {
            RingElement::Int(x) => RingElement::Int(-x),
            RingElement::Quad(x, y) => RingElement::Quad(-x, -y),
            RingElement::Poly(p) => RingElement::Poly(poly::neg(self.fq(), p)),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b) {
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x * y),
            (RingElement::Quad(..), RingElement::Quad(..)) => {
                from_pair(self.quad().unwrap().mul(&a.pair(), &b.pair()))
            }
            (RingElement::Poly(x), RingElement::Poly(y)) => RingElement::Poly(poly::mul(self.fq(), x, y)),
            _ => panic!("mixed encodings {a:?} * {b:?}"),
        }
    }

    pub fn pow(&self, a: &RingElement, e: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Int(x) => x.is_zero(),
            RingElement::Quad(x, y) => x.is_zero() && y.is_zero(),
            RingElement::Poly(p) => p.is_empty(),
        }
    }

    pub fn is_one(&self, a: &RingElement) -> bool {
        *a == self.one()
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        !self.is_zero(a) && self.norm(a).is_one()
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self, u: &RingElement) -> Option<RingElement> {
        if !self.is_unit(u) {
            return None;
        }
        self.exact_div(&self.one(), u)
    }

    /// Euclidean division `a = q*b + r` with `N(r) < N(b)`.
    pub fn div_rem(&self, a: &RingElement, b: &RingElement) -> (RingElement, RingElement) {
        assert!(!self.is_zero(b), "division by zero");
        match (a, b) {
            (RingElement::Int(x), RingElement::Int(y)) => {
                let (q, r) = x.div_mod_floor(y);
                (RingElement::Int(q), RingElement::Int(r))
            }
            (RingElement::Quad(..), RingElement::Quad(..)) => {
                let (q, r) = self.quad().unwrap().div_rem(&a.pair(), &b.pair());
                (from_pair(q), from_pair(r))
            }
            (RingElement::Poly(x), RingElement::Poly(y)) => {
                let (q, r) = poly::div_rem(self.fq(), x, y);
                (RingElement::Poly(q), RingElement::Poly(r))
            }
            _ => panic!("mixed encodings {a:?} / {b:?}"),
        }
    }

    /// `a / b` when `b` divides `a`.
    pub fn exact_div(&self, a: &RingElement, b: &RingElement) -> Option<RingElement> {
        if self.is_zero(b) {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        self.is_zero(&r).then_some(q)
    }

    /// Does `d` divide `a`? (`0` divides only `0`.)
    pub fn divides(&self, d: &RingElement, a: &RingElement) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        if let (RingElement::Quad(..), RingElement::Quad(..)) = (d, a) {
            if let Some(ok) = self.quad().unwrap().divides_small(&d.pair(), &a.pair()) {
                return ok;
            }
        }
        self.is_zero(&self.div_rem(a, d).1)
    }

    /// Field norm, which equals `#R/(a)` for `a != 0`; `N(0) = 0`.
    pub fn norm(&self, a: &RingElement) -> BigUint {
        match a {
            RingElement::Int(x) => x.magnitude().clone(),
            RingElement::Quad(..) => self.quad().unwrap().norm(&a.pair()).to_biguint().unwrap(),
            RingElement::Poly(p) => match poly::degree(p) {
                None => BigUint::zero(),
                Some(d) => BigUint::from(self.fq().order()).pow(d as u32),
            },
        }
    }

    /// `#R/(m)`.
    pub fn norm_index(&self, m: &RingElement) -> Result<BigUint> {
        if self.is_zero(m) {
            return Err(Error::DegenerateModulus);
        }
        Ok(self.norm(m))
    }

    /// Norm as `u64`, saturating.
    pub fn norm_u64(&self, a: &RingElement) -> u64 {
        self.norm(a).to_u64().unwrap_or(u64::MAX)
    }

    /// Extended gcd: `g = s*a + t*b` with `g` a canonical associate.
    pub fn xgcd(&self, a: &RingElement, b: &RingElement) -> Result<(RingElement, RingElement, RingElement)> {
        if self.is_zero(a) && self.is_zero(b) {
            return Err(Error::DegenerateInput("xgcd(0, 0)".into()));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let (u, g) = self.canonical_associate(&r0)?;
        Ok((g, self.mul(&u, &s0), self.mul(&u, &t0)))
    }

    /// Canonical gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match self.xgcd(a, b) {
            Ok((g, _, _)) => g,
            Err(_) => self.zero(),
        }
    }

    /// Canonical lcm; zero if either argument is zero.
    pub fn lcm(&self, a: &RingElement, b: &RingElement) -> RingElement {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let l = self.mul(&self.exact_div(a, &g).unwrap(), b);
        self.canonical(&l)
    }

    /// `(unit, canonical)` with `canonical = unit * x`.
    ///
    /// Conventions: `Z` positive; `Z[i]` argument in `[0, pi/2)`; `Z[w]`
    /// lexicographically least `(a, b)` among associates with `a > 0`;
    /// `F_q[T]` monic.
    pub fn canonical_associate(&self, x: &RingElement) -> Result<(RingElement, RingElement)> {
        if self.is_zero(x) {
            return Err(Error::DegenerateInput("canonical associate of zero".into()));
        }
        Ok(match x {
            RingElement::Int(n) => {
                let u = if n.is_negative() { -1 } else { 1 };
                (self.from_i64(u), RingElement::Int(n.abs()))
            }
            RingElement::Quad(..) => {
                let (u, v) = self.quad().unwrap().canonical(&x.pair());
                (from_pair(u), from_pair(v))
            }
            RingElement::Poly(p) => {
                let f = self.fq();
                let inv = f.inv(*p.last().unwrap()).unwrap();
                (RingElement::Poly(poly::constant(inv)), RingElement::Poly(poly::scale(f, p, inv)))
            }
        })
    }

    /// Canonical associate, mapping `0` to `0`.
    pub fn canonical(&self, x: &RingElement) -> RingElement {
        match self.canonical_associate(x) {
            Ok((_, c)) => c,
            Err(_) => self.zero(),
        }
    }

    pub fn is_canonical(&self, x: &RingElement) -> bool {
        !self.is_zero(x) && self.canonical(x) == *x
    }

    /// The full (finite) unit group.
    pub fn units(&self) -> Vec<RingElement> {
        match self.kind {
            RingKind::Integers => vec![self.from_i64(1), self.from_i64(-1)],
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                self.quad().unwrap().units().into_iter().map(from_pair).collect()
            }
            RingKind::PolynomialsOverFq(q) => (1..q).map(|c| RingElement::Poly(poly::constant(c))).collect(),
        }
    }

    /// Canonical residue of `a` modulo `m` (`m != 0`): the unique member of
    /// the transversal returned by [`Ring::residues`] congruent to `a`.
    pub fn reduce(&self, a: &RingElement, m: &RingElement) -> RingElement {
        assert!(!self.is_zero(m), "reduction modulo zero");
        match (a, m) {
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x.mod_floor(&y.abs())),
            (RingElement::Quad(..), RingElement::Quad(..)) => {
                let q = self.quad().unwrap();
                if let Some(r) = q.reduce_small(&a.pair(), &m.pair()) {
                    return from_pair(r);
                }
                let h = q.hermite(&m.pair());
                from_pair(h.reduce(&a.pair()))
            }
            (RingElement::Poly(x), RingElement::Poly(y)) => RingElement::Poly(poly::rem(self.fq(), x, y)),
            _ => panic!("mixed encodings {a:?} mod {m:?}"),
        }
    }

    /// Are `a` and `b` congruent modulo `m`?
    pub fn congruent(&self, a: &RingElement, b: &RingElement, m: &RingElement) -> bool {
        self.divides(m, &self.sub(a, b))
    }

    /// Canonical transversal of `R/(m)` in deterministic order.
    ///
    /// `Z`: `0..|m|`; `F_q[T]`: polynomials of degree `< deg m` ordered by
    /// their base-`q` coefficient index; quadratic rings: the Hermite box
    /// `{x + y*theta : 0 <= x < A, 0 <= y < D}`, `y` outermost.
    pub fn residues(&self, m: &RingElement) -> Result<Vec<RingElement>> {
        if self.is_zero(m) {
            return Err(Error::DegenerateModulus);
        }
        Ok(match m {
            RingElement::Int(y) => {
                let n = y.abs().to_u64().expect("modulus too large to enumerate");
                (0..n).map(|i| RingElement::Int(BigInt::from(i))).collect()
            }
            RingElement::Quad(..) => {
                let h = self.quad().unwrap().hermite(&m.pair());
                let (a, d) = (h.a.to_u64().unwrap(), h.d.to_u64().unwrap());
                let mut out = Vec::with_capacity((a * d) as usize);
                for y in 0..d {
                    for x in 0..a {
                        out.push(RingElement::Quad(BigInt::from(x), BigInt::from(y)));
                    }
                }
                out
            }
            RingElement::Poly(p) => {
                let q = self.fq().order();
                let d = poly::degree(p).unwrap() as u32;
                let count = (q as u64).checked_pow(d).expect("modulus too large to enumerate");
                (0..count).map(|i| RingElement::Poly(poly::from_index(q, BigUint::from(i)))).collect()
            }
        })
    }

    /// Invertible residues modulo `m`.
    pub fn units_mod(&self, m: &RingElement) -> Result<Vec<RingElement>> {
        self.check_nonunit(m)?;
        Ok(self
            .residues(m)?
            .into_iter()
            .filter(|r| self.is_unit(&self.gcd(r, m)))
            .collect())
    }

    /// Inverse of `a` modulo `m`, as a canonical residue.
    pub fn inverse_mod(&self, a: &RingElement, m: &RingElement) -> Option<RingElement> {
        let (g, s, _) = self.xgcd(a, m).ok()?;
        self.is_one(&g).then(|| self.reduce(&s, m))
    }

    pub(crate) fn check_nonunit(&self, m: &RingElement) -> Result<()> {
        if self.is_zero(m) {
            return Err(Error::DegenerateInput("zero is not allowed here".into()));
        }
        if self.is_unit(m) {
            return Err(Error::DegenerateInput(format!("{} is a unit", self.show(m))));
        }
        Ok(())
    }

    /// The `t`-th element of a fixed infinite enumeration of pairwise
    /// distinct ring elements (nonnegative integers, or polynomials by
    /// coefficient index for `F_q[T]`).
    pub fn enumerate_nth(&self, t: u64) -> RingElement {
        match self.kind {
            RingKind::PolynomialsOverFq(q) => RingElement::Poly(poly::from_index(q, BigUint::from(t))),
            _ => self.from_bigint(&BigInt::from(t)),
        }
    }

    /// Generators of `R` as an additive group over its prime ring.
    pub fn additive_generators(&self) -> Vec<RingElement> {
        match self.kind {
            RingKind::Integers => vec![self.one()],
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => vec![self.one(), self.generator()],
            RingKind::PolynomialsOverFq(_) => self
                .fq()
                .additive_basis()
                .into_iter()
                .map(|c| RingElement::Poly(poly::constant(c)))
                .collect(),
        }
    }

    /// Generators of `R/(m)` as an additive group.
    pub fn additive_generators_mod(&self, m: &RingElement) -> Vec<RingElement> {
        match self.kind {
            RingKind::PolynomialsOverFq(_) => {
                let deg = poly::degree(m.poly()).unwrap_or(0);
                let mut out = Vec::new();
                for j in 0..deg {
                    let mut t = vec![0u32; j + 1];
                    for c in self.fq().additive_basis() {
                        t[j] = c;
                        out.push(RingElement::Poly(t.clone()));
                    }
                }
                out
            }
            _ => self.additive_generators(),
        }
    }

    /// Smallest-norm non-invertible canonical prime: `2`, `1+i`, `1-w`, `T`.
    pub fn smallest_prime(&self) -> RingElement {
        match self.kind {
            RingKind::Integers => self.from_i64(2),
            RingKind::GaussianIntegers => self.quad_elem(1, 1),
            RingKind::EisensteinIntegers => self.canonical(&self.quad_elem(1, -1)),
            RingKind::PolynomialsOverFq(_) => self.generator(),
        }
    }

    /// All elements `r` with `N(r) <= bound` (including zero), ordered by
    /// norm and then by the element order.
    pub fn elements_up_to_norm(&self, bound: u64) -> Vec<RingElement> {
        let mut out: Vec<RingElement> = match self.kind {
            RingKind::Integers => {
                let b = bound as i64;
                (-b..=b).map(|n| self.from_i64(n)).collect()
            }
            RingKind::GaussianIntegers | RingKind::EisensteinIntegers => {
                // |a|, |b| <= sqrt(4B/3) covers both norm forms
                let r = ((4.0 * bound as f64 / 3.0).sqrt().floor() as i64) + 1;
                let mut v = Vec::new();
                for a in -r..=r {
                    for b in -r..=r {
                        let e = self.quad_elem(a, b);
                        if self.norm_u64(&e) <= bound {
                            v.push(e);
                        }
                    }
                }
                v
            }
            RingKind::PolynomialsOverFq(q) => {
                let mut v = vec![self.zero()];
                let mut deg = 0u32;
                while (q as u64).checked_pow(deg).is_some_and(|n| n <= bound) {
                    let count = (q as u64).pow(deg);
                    // polynomials of exact degree `deg`
                    for idx in count..(count * q as u64) {
                        v.push(RingElement::Poly(poly::from_index(q, BigUint::from(idx))));
                    }
                    deg += 1;
                }
                v
            }
        };
        out.sort_by(|a, b| self.norm(a).cmp(&self.norm(b)).then_with(|| a.cmp(b)));
        out
    }

    /// Nonzero canonical associates with `N(r) <= bound`, ordered by norm
    /// and then by the element order.
    pub fn canonical_elements_up_to_norm(&self, bound: u64) -> Vec<RingElement> {
        match self.kind {
            RingKind::Integers => (1..=bound as i64).map(|n| self.from_i64(n)).collect(),
            _ => self
                .elements_up_to_norm(bound)
                .into_iter()
                .filter(|x| self.is_canonical(x))
                .collect(),
        }
    }

    /// Canonical non-units with `N(m) <= bound`.
    pub fn nonunits_up_to_norm(&self, bound: u64) -> Vec<RingElement> {
        self.canonical_elements_up_to_norm(bound)
            .into_iter()
            .filter(|m| !self.is_unit(m))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::integers()
    }

    #[test]
    fn residues_examples() {
        let r = z();
        assert_eq!(r.residues(&r.from_i64(3)).unwrap(), vec![r.from_i64(0), r.from_i64(1), r.from_i64(2)]);
        let g = Ring::gaussian();
        assert_eq!(g.residues(&g.quad_elem(1, 1)).unwrap(), vec![g.zero(), g.one()]);
        let f = Ring::poly_fq(2).unwrap();
        let m = f.poly_elem(&[1, 1, 1]);
        let res = f.residues(&m).unwrap();
        assert_eq!(
            res,
            vec![f.zero(), f.one(), f.poly_elem(&[0, 1]), f.poly_elem(&[1, 1])]
        );
        assert_eq!(r.residues(&r.zero()), Err(Error::DegenerateModulus));
    }

    #[test]
    fn residues_brute_force_gaussian_one_plus_i() {
        // oracle: lattice points in a box, bucketed by congruence mod 1+i
        let g = Ring::gaussian();
        let m = g.quad_elem(1, 1);
        let mut classes: Vec<RingElement> = Vec::new();
        for a in -3..=3 {
            for b in -3..=3 {
                let x = g.quad_elem(a, b);
                if !classes.iter().any(|c| g.congruent(c, &x, &m)) {
                    classes.push(x);
                }
            }
        }
        assert_eq!(classes.len(), 2);
        let res = g.residues(&m).unwrap();
        assert_eq!(res.len(), 2);
        assert!(!g.congruent(&res[0], &res[1], &m));
    }

    #[test]
    fn norm_index_examples() {
        assert_eq!(z().norm_index(&z().from_i64(5)).unwrap(), BigUint::from(5u32));
        let g = Ring::gaussian();
        assert_eq!(g.norm_index(&g.quad_elem(1, 2)).unwrap(), BigUint::from(5u32));
        // brute-force count of residues for 1+2i
        assert_eq!(g.residues(&g.quad_elem(1, 2)).unwrap().len(), 5);
        let f3 = Ring::poly_fq(3).unwrap();
        assert_eq!(f3.norm_index(&f3.poly_elem(&[1, 0, 1])).unwrap(), BigUint::from(9u32));
        assert_eq!(z().norm_index(&z().zero()), Err(Error::DegenerateModulus));
    }

    #[test]
    fn xgcd_examples() {
        let r = z();
        let (g, s, t) = r.xgcd(&r.from_i64(12), &r.from_i64(18)).unwrap();
        assert_eq!(g, r.from_i64(6));
        assert_eq!(r.add(&r.mul(&s, &r.from_i64(12)), &r.mul(&t, &r.from_i64(18))), g);

        let gi = Ring::gaussian();
        let (g, _, _) = gi.xgcd(&gi.quad_elem(1, 1), &gi.from_i64(2)).unwrap();
        assert_eq!(g, gi.quad_elem(1, 1));

        let f = Ring::poly_fq(2).unwrap();
        let (g, _, _) = f.xgcd(&f.poly_elem(&[1, 1, 1]), &f.poly_elem(&[1, 1])).unwrap();
        assert_eq!(g, f.one());
        assert!(r.xgcd(&r.zero(), &r.zero()).is_err());
    }

    #[test]
    fn canonical_associate_examples() {
        let r = z();
        assert_eq!(
            r.canonical_associate(&r.from_i64(-6)).unwrap(),
            (r.from_i64(-1), r.from_i64(6))
        );
        let g = Ring::gaussian();
        assert_eq!(
            g.canonical_associate(&g.quad_elem(-2, 1)).unwrap(),
            (g.quad_elem(0, -1), g.quad_elem(1, 2))
        );
        let f = Ring::poly_fq(2).unwrap();
        let x = f.poly_elem(&[1, 1]);
        assert_eq!(f.canonical_associate(&x).unwrap(), (f.one(), x));
        let w = Ring::eisenstein();
        assert_eq!(w.smallest_prime(), w.quad_elem(1, -1));
        assert!(r.canonical_associate(&r.zero()).is_err());
    }

    #[test]
    fn units_mod_examples() {
        let r = z();
        assert_eq!(r.units_mod(&r.from_i64(6)).unwrap(), vec![r.from_i64(1), r.from_i64(5)]);
        let g = Ring::gaussian();
        assert_eq!(g.units_mod(&g.from_i64(2)).unwrap(), vec![g.one(), g.quad_elem(0, 1)]);
        let f = Ring::poly_fq(2).unwrap();
        assert_eq!(
            f.units_mod(&f.poly_elem(&[0, 0, 1])).unwrap(),
            vec![f.one(), f.poly_elem(&[1, 1])]
        );
        assert!(r.units_mod(&r.one()).is_err());
    }

    #[test]
    fn window_enumeration_is_sorted_and_complete() {
        let g = Ring::gaussian();
        let w = g.elements_up_to_norm(5);
        // norms 0, 1, 2, 4, 5
        assert_eq!(w.len(), 1 + 4 + 4 + 4 + 8);
        assert!(w.windows(2).all(|p| g.norm(&p[0]) <= g.norm(&p[1])));
        let e = Ring::eisenstein();
        // norms 0, 1 (6), 3 (6), 4 (6)
        assert_eq!(e.elements_up_to_norm(4).len(), 19);
        assert_eq!(e.canonical_elements_up_to_norm(4).len(), 3);
    }
}
