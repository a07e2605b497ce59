//! `R/(m) ≅ ∏ R/(p^e)`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{Ring, RingElement};
use crate::error::Result;

/// Isomorphism data for the prime-power splitting of `R/(m)`.
#[derive(Debug, Clone)]
pub struct CrtSplit {
    ring: Ring,
    modulus: RingElement,
    /// Canonical prime powers `p_i^{e_i}`.
    parts: Vec<RingElement>,
    /// `idempotents[i] ≡ 1 mod parts[i]`, `≡ 0 mod parts[j]` for `j != i`.
    idempotents: Vec<RingElement>,
}

impl CrtSplit {
    pub fn new(ring: &Ring, m: &RingElement) -> Result<CrtSplit> {
        let fac = ring.factor(m)?;
        let modulus = ring.canonical(m);
        let parts: Vec<RingElement> = fac.factors.iter().map(|(p, e)| ring.pow(p, *e)).collect();
        let idempotents = parts
            .iter()
            .map(|q| {
                let cofactor = ring.exact_div(&modulus, q).unwrap();
                let inv = ring.inverse_mod(&cofactor, q).expect("prime powers are coprime");
                ring.reduce(&ring.mul(&cofactor, &inv), &modulus)
            })
            .collect();
        Ok(CrtSplit { ring: ring.clone(), modulus, parts, idempotents })
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    pub fn parts(&self) -> &[RingElement] {
        &self.parts
    }

    /// `r mod m ↦ (r mod p_i^{e_i})_i`.
    pub fn forward(&self, r: &RingElement) -> Vec<RingElement> {
        self.parts.iter().map(|q| self.ring.reduce(r, q)).collect()
    }

    /// `(r_i)_i ↦ Σ r_i e_i mod m`.
    pub fn inverse(&self, tuple: &[RingElement]) -> RingElement {
        assert_eq!(tuple.len(), self.parts.len(), "tuple length must match the number of factors");
        let r = &self.ring;
        let sum = tuple
            .iter()
            .zip(&self.idempotents)
            .fold(r.zero(), |acc, (x, e)| r.add(&acc, &r.mul(x, e)));
        r.reduce(&sum, &self.modulus)
    }
}

/// Outcome of [`CrtSplit::audit`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrtReport {
    pub modulus: String,
    pub parts: Vec<String>,
    pub residues: usize,
    pub bijective: bool,
    pub additive: bool,
    pub multiplicative: bool,
    /// First failing instance.
    pub counterexample: Option<String>,
}

impl CrtReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.additive && self.multiplicative
    }
}

impl CrtSplit {
    /// Checks that `forward` is a bijection onto the product, inverted by
    /// `inverse`, and additive and multiplicative on all pairs of residues.
    pub fn audit(&self) -> Result<CrtReport> {
        let r = &self.ring;
        let residues = r.residues(&self.modulus)?;
        let index: HashMap<&RingElement, usize> = residues.iter().enumerate().map(|(i, x)| (x, i)).collect();
        // each component as index tables, so pairs cost two reductions mod m
        let mut components = Vec::new();
        for q in &self.parts {
            let res = r.residues(q)?;
            let idx: HashMap<&RingElement, usize> = res.iter().enumerate().map(|(i, x)| (x, i)).collect();
            let table = |f: &dyn Fn(&RingElement, &RingElement) -> RingElement| -> Vec<usize> {
                res.iter().flat_map(|a| res.iter().map(|b| idx[&r.reduce(&f(a, b), q)])).collect()
            };
            let add = table(&|a, b| r.add(a, b));
            let mul = table(&|a, b| r.mul(a, b));
            components.push((res.len(), add, mul));
        }
        let images: Vec<Vec<usize>> = residues
            .iter()
            .map(|x| {
                self.forward(x)
                    .iter()
                    .zip(&self.parts)
                    .map(|(y, q)| r.residues(q).map(|v| v.iter().position(|z| z == y).expect("forward reduces")))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        let product: usize = components.iter().map(|c| c.0).product();
        let mut counterexample = None;
        let distinct: HashSet<&Vec<usize>> = images.iter().collect();
        let round_trip = residues.iter().all(|x| &self.inverse(&self.forward(x)) == x);
        let bijective = distinct.len() == residues.len() && product == residues.len() && round_trip;
        if !bijective {
            counterexample = Some("forward map is not a bijection".to_string());
        }
        let (mut additive, mut multiplicative) = (true, true);
        let componentwise = |a: &[usize], b: &[usize], mul: bool| -> Vec<usize> {
            a.iter()
                .zip(b)
                .zip(&components)
                .map(|((&x, &y), (n, add_t, mul_t))| if mul { mul_t[x * n + y] } else { add_t[x * n + y] })
                .collect()
        };
        for (i, x) in residues.iter().enumerate() {
            for (j, y) in residues.iter().enumerate().skip(i) {
                let sum = index[&r.reduce(&r.add(x, y), &self.modulus)];
                let prod = index[&r.reduce(&r.mul(x, y), &self.modulus)];
                let ok_add = images[sum] == componentwise(&images[i], &images[j], false);
                let ok_mul = images[prod] == componentwise(&images[i], &images[j], true);
                if (!ok_add || !ok_mul) && counterexample.is_none() {
                    counterexample = Some(format!("x = {}, y = {}", r.show(x), r.show(y)));
                }
                additive &= ok_add;
                multiplicative &= ok_mul;
            }
        }
        Ok(CrtReport {
            modulus: r.show(&self.modulus),
            parts: self.parts.iter().map(|q| r.show(q)).collect(),
            residues: residues.len(),
            bijective,
            additive,
            multiplicative,
            counterexample,
        })
    }
}

impl Ring {
    pub fn crt_split(&self, m: &RingElement) -> Result<CrtSplit> {
        CrtSplit::new(self, m)
    }
}
