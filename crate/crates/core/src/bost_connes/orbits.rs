use std::collections::BTreeMap;

use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement, RingKind};
use crate::star::{AlgebraElement, RelationCheck, RelationsReport};

/// The unit group acting on residues: `{1}` for `Z` (positive units of the
/// one real place), all roots of unity for the imaginary quadratic rings.
pub fn bc_units(ring: &Ring) -> Result<Vec<RingElement>> {
    match ring.kind() {
        RingKind::Integers => Ok(vec![ring.one()]),
        RingKind::GaussianIntegers | RingKind::EisensteinIntegers => Ok(ring.units()),
        RingKind::PolynomialsOverFq(_) => Err(Error::UnsupportedRing(format!(
            "{} is a function field ring; the presentation needs a number ring",
            ring.name()
        ))),
    }
}

/// One class of `(R/(m))/~` under the unit group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitOrbit {
    pub modulus: RingElement,
    /// Members in residue order; the first is the representative.
    pub members: Vec<RingElement>,
}

impl UnitOrbit {
    pub fn rep(&self) -> &RingElement {
        &self.members[0]
    }

    pub fn contains(&self, r: &RingElement) -> bool {
        self.members.contains(r)
    }

    pub fn show(&self, ring: &Ring) -> String {
        let ms: Vec<String> = self.members.iter().map(|x| ring.show(x)).collect();
        format!("{{{}}} mod {}", ms.join(", "), ring.show(&self.modulus))
    }
}

/// Orbit partition of the residues mod `m`, ordered by representative.
pub fn unit_orbits(ring: &Ring, m: &RingElement) -> Result<Vec<UnitOrbit>> {
    let units = bc_units(ring)?;
    let m = ring.canonical(m);
    let residues = ring.residues(&m)?;
    let position: BTreeMap<&RingElement, usize> = residues.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut assigned = vec![false; residues.len()];
    let mut out = Vec::new();
    for (i, r) in residues.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut idx: Vec<usize> = units
            .iter()
            .map(|u| position[&ring.reduce(&ring.mul(u, r), &m)])
            .collect();
        idx.sort_unstable();
        idx.dedup();
        for &j in &idx {
            assigned[j] = true;
        }
        out.push(UnitOrbit { modulus: m.clone(), members: idx.into_iter().map(|j| residues[j].clone()).collect() });
    }
    Ok(out)
}

/// Orbit of the residue of `r` mod `m`.
pub fn orbit_of(ring: &Ring, m: &RingElement, r: &RingElement) -> Result<UnitOrbit> {
    let m = ring.canonical(m);
    let r = ring.reduce(r, &m);
    let units = bc_units(ring)?;
    let residues = ring.residues(&m)?;
    let mut members: Vec<RingElement> = units.iter().map(|u| ring.reduce(&ring.mul(u, &r), &m)).collect();
    let position = |x: &RingElement| residues.iter().position(|y| y == x).unwrap();
    members.sort_by_key(position);
    members.dedup();
    Ok(UnitOrbit { modulus: m, members })
}

/// `f(m, n) = Σ_{l ∈ n} p_{l+(m)}`.
pub fn bc_f(ring: &Ring, m: &RingElement, n: &UnitOrbit) -> Result<AlgebraElement> {
    bc_units(ring)?;
    if ring.is_zero(m) {
        return Err(Error::DegenerateModulus);
    }
    let m = ring.canonical(m);
    if n.modulus != m || n.members.is_empty() {
        return Err(Error::DomainError(format!(
            "orbit {} does not live at modulus {}",
            n.show(ring),
            ring.show(&m)
        )));
    }
    let expected = orbit_of(ring, &m, n.rep())?;
    if &expected != n {
        return Err(Error::DomainError(format!("{} is not a unit orbit", n.show(ring))));
    }
    let sum = n.members.iter().fold(AlgebraElement::zero(ring), |acc, l| {
        &acc + &AlgebraElement::p(ring, &Coset::new(ring, l.clone(), m.clone()).unwrap())
    });
    Ok(sum)
}

/// `f(m, orbit of rep)`.
pub fn bc_f_by_rep(ring: &Ring, m: &RingElement, rep: &RingElement) -> Result<AlgebraElement> {
    if ring.is_zero(m) {
        return Err(Error::DegenerateModulus);
    }
    bc_f(ring, m, &orbit_of(ring, m, rep)?)
}

/// `s_p` for a class representative `p`.
pub fn bc_s(ring: &Ring, p: &RingElement) -> Result<AlgebraElement> {
    bc_units(ring)?;
    AlgebraElement::s(ring, p)
}

/// Checks the four relations of the presentation for all `p, q ∈ ps` and
/// `m ∈ ms`:
///
/// 1. `s_p s_q = s_{pq}`, and `π_α(s_p s_q) = π_α(s_{[pq]})` with `[pq]` the
///    class representative;
/// 2. `f(1, 0) = 1`;
/// 3. `s_p f(m, n) s_p* = f(mp, np)` for every orbit `n` mod `m`;
/// 4. `Σ_{j ↦ k} f(mp, j) = f(p, k)` over orbits `j` mod `mp` reducing to
///    `k` mod `p`;
///
/// and that the orbits partition unity at each modulus.
pub fn bc_relations_check(ring: &Ring, ps: &[RingElement], ms: &[RingElement]) -> Result<RelationsReport> {
    bc_units(ring)?;
    let mut r1 = RelationCheck::new("s_p s_q = s_pq");
    let mut r2 = RelationCheck::new("f(1,0) = 1");
    let mut r3 = RelationCheck::new("s_p f(m,n) s_p* = f(mp,np)");
    let mut r4 = RelationCheck::new("sum_j f(mp,j) = f(p,k)");
    let mut r5 = RelationCheck::new("sum_n f(m,n) = 1");
    let show = |x: &RingElement| ring.show(x);
    let alpha = super::GaloisParameter::trivial();
    let reps = ring.canonical_elements_up_to_norm(10);

    for p in ps {
        for q in ps {
            let lhs = &bc_s(ring, p)? * &bc_s(ring, q)?;
            let pq = ring.mul(p, q);
            let mut ok = lhs == bc_s(ring, &pq)?;
            let canon = bc_s(ring, &ring.canonical(&pq))?;
            for r in &reps {
                ok &= pi_alpha_eq(&lhs, &canon, &alpha, r)?;
            }
            r1.record(ok, || format!("p = {}, q = {}", show(p), show(q)));
        }
    }

    let one = AlgebraElement::one(ring);
    let f10 = bc_f_by_rep(ring, &ring.one(), &ring.zero())?;
    r2.record(f10 == one, || format!("f(1,0) = {}", f10.show()));

    let mut orbit_cache: BTreeMap<RingElement, Vec<UnitOrbit>> = BTreeMap::new();
    let mut orbits = |m: &RingElement| -> Result<Vec<UnitOrbit>> {
        let m = ring.canonical(m);
        if let Some(o) = orbit_cache.get(&m) {
            return Ok(o.clone());
        }
        let o = unit_orbits(ring, &m)?;
        orbit_cache.insert(m, o.clone());
        Ok(o)
    };

    for m in ms {
        let sum = orbits(m)?
            .iter()
            .map(|n| bc_f(ring, m, n))
            .try_fold(AlgebraElement::zero(ring), |acc, f| f.map(|f| &acc + &f))?;
        r5.record(sum == one, || format!("m = {}", show(m)));
    }

    for p in ps {
        let sp = bc_s(ring, p)?;
        let sp_star = sp.adjoint();
        for m in ms {
            let mp = ring.mul(m, p);
            for n in orbits(m)? {
                let lhs = &(&sp * &bc_f(ring, m, &n)?) * &sp_star;
                let rhs = bc_f(ring, &mp, &orbit_of(ring, &mp, &ring.mul(n.rep(), p))?)?;
                r3.record(lhs == rhs, || format!("p = {}, m = {}, n = {}", show(p), show(m), n.show(ring)));
            }
            for k in orbits(p)? {
                let mut sum = AlgebraElement::zero(ring);
                for j in orbits(&mp)? {
                    if k.contains(&ring.reduce(j.rep(), &ring.canonical(p))) {
                        sum = &sum + &bc_f(ring, &mp, &j)?;
                    }
                }
                let rhs = bc_f(ring, p, &k)?;
                r4.record(sum == rhs, || format!("m = {}, p = {}, k = {}", show(m), show(p), k.show(ring)));
            }
        }
    }
    Ok(RelationsReport { ring: ring.name(), checks: vec![r1, r2, r3, r4, r5] })
}

fn pi_alpha_eq(
    x: &AlgebraElement,
    y: &AlgebraElement,
    alpha: &super::GaloisParameter,
    r: &RingElement,
) -> Result<bool> {
    Ok(super::pi_alpha_apply(x, alpha, r)? == super::pi_alpha_apply(y, alpha, r)?)
}
