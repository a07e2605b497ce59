//! Canonical monomials `s_m* p_c u^k s_{m'}`.
//!
//! On `ℓ²(R)` such a word sends `ξ_r` to `ξ_{(m'r+k)/m}` when `m'r+k ∈ c`
//! and kills it otherwise, so it is determined by the partial affine map
//! `r ↦ (m'/m) r + k/m` on `{r : m'r + k ∈ c}`. The canonical form picks
//! one representative per map:
//!
//! * `c ⊆ (m)` and `c ⊆ k + (m')` (anything outside is killed anyway);
//! * `gcd(m, m') = 1` (scaling all four entries by `t` gives the same map);
//! * `m` is a canonical associate.
//!
//! Units cannot be pushed into the coefficient: `s_ε` for a unit `ε` is the
//! unitary `ξ_r ↦ ξ_{εr}`, not a scalar. So `m'` keeps whatever unit is left.

use crate::affine::PartialAffineMap;
use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::ring::{Fraction, Ring, RingElement};

/// Field order gives the sort order: terms with the same affine part are
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    m: RingElement,
    k: RingElement,
    mp: RingElement,
    c: Coset,
}

/// Affine part `(m, k, m')` of a canonical monomial.
pub type AffineKey = (RingElement, RingElement, RingElement);

impl Monomial {
    /// Canonical form of the raw word `s_m* p_c u^k s_{m'}`; `None` if the
    /// word is zero.
    pub fn normalize(
        ring: &Ring,
        m: &RingElement,
        c: &Coset,
        k: &RingElement,
        mp: &RingElement,
    ) -> Result<Option<Monomial>> {
        if ring.is_zero(m) || ring.is_zero(mp) {
            return Err(Error::DegenerateInput("isometry index 0".into()));
        }
        let Some(c) = c
            .intersect(ring, &Coset::ideal(ring, m)?)
            .and_then(|c| c.intersect(ring, &Coset::new(ring, k.clone(), mp.clone()).unwrap()))
        else {
            return Ok(None);
        };
        // every element of c is ≡ 0 mod g and ≡ k mod g, and lcm(m, m') | modulus(c)
        let g = ring.gcd(m, mp);
        let div = |x: &RingElement| ring.exact_div(x, &g).expect("gcd divides the constrained word");
        let (m, mp, k) = (div(m), div(mp), div(k));
        let c = Coset::new(ring, div(c.base()), div(c.modulus()))?;
        let (u, m) = ring.canonical_associate(&m)?;
        Ok(Some(Monomial {
            m,
            k: ring.mul(&u, &k),
            mp: ring.mul(&u, &mp),
            c: c.scale(ring, &u),
        }))
    }

    /// The word `s_m* u^n f u^{-n'} s_{m'}` with `f` the
    /// projection onto the coset `f`.
    pub fn from_word(
        ring: &Ring,
        m: &RingElement,
        n: &RingElement,
        f: &Coset,
        n_prime: &RingElement,
        mp: &RingElement,
    ) -> Result<Option<Monomial>> {
        // u^n p_f u^{-n'} = p_{n+f} u^{n-n'}
        Monomial::normalize(ring, m, &f.translate(ring, n), &ring.sub(n, n_prime), mp)
    }

    pub fn m(&self) -> &RingElement {
        &self.m
    }

    pub fn k(&self) -> &RingElement {
        &self.k
    }

    pub fn mp(&self) -> &RingElement {
        &self.mp
    }

    pub fn c(&self) -> &Coset {
        &self.c
    }

    pub fn key(&self) -> AffineKey {
        (self.m.clone(), self.k.clone(), self.mp.clone())
    }

    /// Affine part is `r ↦ r` (a diagonal term).
    pub fn is_diagonal(&self, ring: &Ring) -> bool {
        self.has_unit_slope(ring) && ring.is_zero(&self.k)
    }

    /// Affine part is a translation `r ↦ r + b`.
    pub fn has_unit_slope(&self, ring: &Ring) -> bool {
        ring.is_one(&self.m) && ring.is_one(&self.mp)
    }

    pub(crate) fn with_coset(&self, c: Coset) -> Monomial {
        Monomial { c, ..self.clone() }
    }

    pub(crate) fn from_key(key: &AffineKey, c: Coset) -> Monomial {
        Monomial { m: key.0.clone(), k: key.1.clone(), mp: key.2.clone(), c }
    }

    /// `a = m'/m`, `b = k/m`, domain `{r : m'r + k ∈ c}`.
    pub fn to_map(&self, ring: &Ring) -> PartialAffineMap {
        let a = Fraction::new(ring, self.mp.clone(), self.m.clone()).unwrap();
        let b = Fraction::new(ring, self.k.clone(), self.m.clone()).unwrap();
        let domain = self
            .c
            .preimage(ring, &Fraction::integer(ring, self.mp.clone()), &Fraction::integer(ring, self.k.clone()))
            .unwrap()
            .expect("canonical monomials have nonempty domains");
        PartialAffineMap { a, b, domain }
    }

    /// Inverse of [`Monomial::to_map`]: `m = den(a)`, `m' = num(a)`,
    /// `k = b*m`, `c = m'*domain + k`.
    pub fn from_map(ring: &Ring, map: &PartialAffineMap) -> Result<Option<Monomial>> {
        let m = map.a.den().clone();
        let mp = map.a.num().clone();
        let k = map
            .b
            .mul(ring, &Fraction::integer(ring, m.clone()))
            .to_integral(ring)
            .ok_or_else(|| Error::NotIntegral(map.show(ring)))?;
        let c = map.domain.scale(ring, &mp).translate(ring, &k);
        Monomial::normalize(ring, &m, &c, &k, &mp)
    }

    /// Product by composing partial affine maps (`self` applied last).
    pub fn compose(&self, ring: &Ring, rhs: &Monomial) -> Option<Monomial> {
        let x = self.to_map(ring);
        let y = rhs.to_map(ring);
        let inner = x.domain.preimage(ring, &y.a, &y.b).unwrap()?;
        let domain = y.domain.intersect(ring, &inner)?;
        let map = PartialAffineMap {
            a: x.a.mul(ring, &y.a),
            b: x.a.mul(ring, &y.b).add(ring, &x.b),
            domain,
        };
        Monomial::from_map(ring, &map).unwrap()
    }

    /// Product by word rewriting:
    ///
    /// ```text
    /// s_{m1}* p_{c1} u^{k1} s_{m1'} · s_{m2}* p_{c2} u^{k2} s_{m2'}
    ///   = s_{m1 m2}* p_{m2 c1} p_{m1' c2 + m2 k1} u^{m2 k1 + m1' k2} s_{m1' m2'}
    /// ```
    ///
    /// using `s_a s_b* = s_b* s_a e_b`, `x s_b* = s_b* (s_b x s_b*)` and
    /// `s_a p_c = p_{ac} s_a`, `s_a u^k = u^{ak} s_a`, `u^k p_c = p_{c+k} u^k`.
    pub fn product_rewrite(&self, ring: &Ring, rhs: &Monomial) -> Option<Monomial> {
        let (m1, c1, k1, mp1) = (&self.m, &self.c, &self.k, &self.mp);
        let (m2, c2, k2, mp2) = (&rhs.m, &rhs.c, &rhs.k, &rhs.mp);
        let left = c1.scale(ring, m2);
        let right = c2.scale(ring, mp1).translate(ring, &ring.mul(m2, k1));
        let c = left.intersect(ring, &right)?;
        let k = ring.add(&ring.mul(m2, k1), &ring.mul(mp1, k2));
        Monomial::normalize(ring, &ring.mul(m1, m2), &c, &k, &ring.mul(mp1, mp2)).unwrap()
    }

    /// `(s_m* p_c u^k s_{m'})* = s_{m'}* p_{c-k} u^{-k} s_m`.
    pub fn adjoint(&self, ring: &Ring) -> Monomial {
        let c = self.c.translate(ring, &ring.neg(&self.k));
        Monomial::normalize(ring, &self.mp, &c, &ring.neg(&self.k), &self.m)
            .unwrap()
            .expect("adjoint of a nonzero word is nonzero")
    }

    /// `(m) ∩ (k + (m'))`, the coset every canonical `c` lies in.
    pub fn implied_coset(&self, ring: &Ring) -> Coset {
        Coset::ideal(ring, &self.m)
            .unwrap()
            .intersect(ring, &Coset::new(ring, self.k.clone(), self.mp.clone()).unwrap())
            .expect("m and m' are coprime")
    }

    /// Word form, trivial parts omitted; `1` for the identity.
    pub fn show(&self, ring: &Ring) -> String {
        let mut parts = Vec::new();
        if !ring.is_one(&self.m) {
            parts.push(format!("s[{}]*", ring.show(&self.m)));
        }
        if self.c != self.implied_coset(ring) {
            parts.push(format!("p[{}]", self.c.show(ring)));
        }
        if !ring.is_zero(&self.k) {
            parts.push(format!("u[{}]", ring.show(&self.k)));
        }
        if !ring.is_one(&self.mp) {
            parts.push(format!("s[{}]", ring.show(&self.mp)));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}
