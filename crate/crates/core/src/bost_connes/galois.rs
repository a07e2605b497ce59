use std::collections::BTreeMap;

use crate::adele::level_set;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::scalar::Scalar;
use crate::star::AlgebraElement;

use super::orbits::{bc_units, orbit_of, UnitOrbit};

/// Finite shadow of a Galois element: a compatible family of invertible
/// residues `w_m` (up to units) over a level set. The trivial parameter
/// has `w_m = 1` at every level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisParameter {
    data: Option<BTreeMap<RingElement, UnitOrbit>>,
}

impl GaloisParameter {
    pub fn trivial() -> Self {
        GaloisParameter { data: None }
    }

    /// Accepts `(w, m)` seeds on a divisor-closed level set.
    pub fn new(ring: &Ring, seeds: &[(RingElement, RingElement)]) -> Result<Self> {
        bc_units(ring)?;
        let levels: Vec<RingElement> = seeds.iter().map(|(_, m)| m.clone()).collect();
        let levels = level_set(ring, &levels)?;
        let mut data = BTreeMap::new();
        for (w, m) in seeds {
            let m = ring.canonical(m);
            if ring.inverse_mod(w, &m).is_none() {
                return Err(Error::DomainError(format!(
                    "{} is not invertible mod {}",
                    ring.show(w),
                    ring.show(&m)
                )));
            }
            let orbit = orbit_of(ring, &m, w)?;
            if let Some(prev) = data.insert(m.clone(), orbit.clone()) {
                if prev != orbit {
                    return Err(Error::IncompatibleFamily(format!("two seeds at level {}", ring.show(&m))));
                }
            }
        }
        for big in &levels {
            for small in &levels {
                if big == small || !ring.divides(small, big) {
                    continue;
                }
                let projected = orbit_of(ring, small, data[big].rep())?;
                if projected != data[small] {
                    return Err(Error::IncompatibleFamily(format!(
                        "{} does not reduce to {}",
                        data[big].show(ring),
                        data[small].show(ring)
                    )));
                }
            }
        }
        Ok(GaloisParameter { data: Some(data) })
    }

    pub fn is_trivial(&self) -> bool {
        self.data.is_none()
    }

    pub fn levels(&self) -> Vec<RingElement> {
        self.data.as_ref().map(|d| d.keys().cloned().collect()).unwrap_or_default()
    }

    /// `w_m`, or `None` when `m` is outside the level set.
    pub fn residue_at(&self, ring: &Ring, m: &RingElement) -> Option<RingElement> {
        let m = ring.canonical(m);
        if ring.is_unit(&m) {
            return Some(ring.zero());
        }
        match &self.data {
            None => Some(ring.reduce(&ring.one(), &m)),
            Some(d) => d.get(&m).map(|o| o.rep().clone()),
        }
    }

    pub fn show(&self, ring: &Ring) -> String {
        match &self.data {
            None => "trivial".into(),
            Some(d) => d
                .values()
                .map(|o| format!("{}mod{}", ring.show(o.rep()), ring.show(&o.modulus)))
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

/// `π_α(x) ξ_r` on `ℓ²` of ideal classes, for `r` a class representative.
///
/// Terms of `x` are `s_m* p_c s_{m'}` (no translation part); such a term
/// sends `ξ_r` to `ξ_{[m'r/m]}` when `w_L m'r ∈ c`, with `L` the modulus of
/// `c` and `w_L` the parameter at that level. Units act trivially.
pub fn pi_alpha_apply(x: &AlgebraElement, alpha: &GaloisParameter, r: &RingElement) -> Result<Vec<(Scalar, RingElement)>> {
    let ring = x.ring();
    bc_units(ring)?;
    if ring.is_zero(r) || !ring.is_canonical(r) {
        return Err(Error::DomainError(format!("{} is not a class representative", ring.show(r))));
    }
    let mut out: BTreeMap<RingElement, Scalar> = BTreeMap::new();
    for (t, v) in x.terms() {
        if !ring.is_zero(t.k()) {
            return Err(Error::DomainError(format!("{} has a translation part", t.show(ring))));
        }
        let level = t.c().modulus();
        let w = alpha.residue_at(ring, level).ok_or_else(|| {
            Error::RefinementMismatch(format!("level {} is outside the parameter's levels", ring.show(level)))
        })?;
        let target = ring.mul(t.mp(), r);
        if !t.c().contains(ring, &ring.mul(&w, &target)) {
            continue;
        }
        // w_L is invertible mod L and m | L, so m divides the target
        let image = ring.canonical(&ring.exact_div(&target, t.m()).expect("c lies in (m)"));
        *out.entry(image).or_insert_with(Scalar::zero) += v;
    }
    Ok(out.into_iter().filter(|(_, v)| !v.is_zero()).map(|(r, v)| (v, r)).collect())
}
