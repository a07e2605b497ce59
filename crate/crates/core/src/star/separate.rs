//! Separating projections for the diagonal part and the isometry witnessing
//! pure infiniteness.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use crate::coset::{Coset, IndicatorCombination};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::scalar::Scalar;

use super::element::AlgebraElement;
use super::monomial::{AffineKey, Monomial};

/// Output of [`choose_separating`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingFamily {
    /// Common level `M` of the coset data in `y`.
    pub level: RingElement,
    /// Atoms `n_i + (M)` met by some term, in element order.
    pub atoms: Vec<RingElement>,
    /// `ν_i ≡ n_i mod M`.
    pub nus: Vec<RingElement>,
    pub mu: RingElement,
    /// `f_i = ν_i + (μ)`.
    pub projections: Vec<Coset>,
    /// Affine parts `(m, k, m')` of the terms killed by the expectation.
    pub critical: Vec<AffineKey>,
}

/// `k + ν(m' - m)`: zero-free on `ν_i + (μ)` exactly when the compressed term
/// vanishes.
fn exclusion(ring: &Ring, key: &AffineKey, nu: &RingElement) -> RingElement {
    let (m, k, mp) = key;
    ring.add(k, &ring.mul(nu, &ring.sub(mp, m)))
}

/// Picks `ν_i` and `μ` so that compressing by `f_i = p_{ν_i+(μ)}` kills every
/// critical term and maps the atoms of level `M` onto the `f_i`.
pub fn choose_separating(y: &AlgebraElement) -> SeparatingFamily {
    let ring = y.ring();
    let level = y
        .terms()
        .keys()
        .fold(ring.one(), |acc, t| ring.lcm(&acc, t.c().modulus()));

    // for the word s_m* u^k f s_m' the projection is f = c - k
    let mut atoms = BTreeSet::new();
    for t in y.terms().keys() {
        let f = t.c().translate(ring, &ring.neg(t.k()));
        for a in f.refine(ring, &level).expect("level is the lcm") {
            atoms.insert(a.base().clone());
        }
    }
    let atoms: Vec<RingElement> = atoms.into_iter().collect();

    let mut critical: Vec<AffineKey> = y
        .terms()
        .keys()
        .filter(|t| !t.is_diagonal(ring))
        .map(Monomial::key)
        .collect();
    critical.dedup();

    let nus: Vec<RingElement> = atoms
        .iter()
        .map(|n| {
            (0u64..)
                .map(|t| ring.add(n, &ring.mul(&level, &ring.enumerate_nth(t))))
                .find(|nu| critical.iter().all(|key| !ring.is_zero(&exclusion(ring, key, nu))))
                .expect("only finitely many candidates are excluded")
        })
        .collect();

    let mut mu = ring.mul(&ring.smallest_prime(), &level);
    for nu in &nus {
        for key in &critical {
            mu = ring.mul(&mu, &exclusion(ring, key, nu));
        }
    }
    let mu = ring.canonical(&mu);
    let projections = nus
        .iter()
        .map(|nu| Coset::new(ring, nu.clone(), mu.clone()).unwrap())
        .collect();
    SeparatingFamily { level, atoms, nus, mu, projections, critical }
}

impl SeparatingFamily {
    /// Checks the selection conditions at coset level; `Err` names the first
    /// violation.
    pub fn check(&self, ring: &Ring) -> std::result::Result<(), String> {
        if !ring.divides(&self.level, &self.mu) {
            return Err("mu is not in (M)".into());
        }
        let mut seen = BTreeSet::new();
        for (i, (n, nu)) in self.atoms.iter().zip(&self.nus).enumerate() {
            if !ring.congruent(n, nu, &self.level) {
                return Err(format!("nu_{i} = {} is not {} mod M", ring.show(nu), ring.show(n)));
            }
            for key in &self.critical {
                let x = exclusion(ring, key, nu);
                if ring.divides(&self.mu, &x) {
                    return Err(format!("exclusion {} lies in (mu) for atom {i}", ring.show(&x)));
                }
            }
            let f = &self.projections[i];
            // f_i inside atom i, and distinct atoms are disjoint, so
            // f_i a_j f_i = δ_ij f_i
            let atom = Coset::new(ring, n.clone(), self.level.clone()).unwrap();
            if !f.is_subset(ring, &atom) {
                return Err(format!("f_{i} is not inside its atom"));
            }
            if !seen.insert(f.base().clone()) {
                return Err(format!("f_{i} repeats an earlier projection"));
            }
        }
        Ok(())
    }

    /// `Φ(z) = Σ z(n_i) f_i` for `z` in the span of the atoms.
    pub fn phi(&self, ring: &Ring, z: &IndicatorCombination) -> AlgebraElement {
        let terms = self
            .atoms
            .iter()
            .zip(&self.projections)
            .map(|(n, f)| (f.clone(), z.value_at(ring, n)));
        AlgebraElement::diagonal(ring, &IndicatorCombination::from_terms(ring, terms))
    }
}

fn check_orthogonal(ring: &Ring, fs: &[Coset]) -> Result<()> {
    let same_level = fs.windows(2).all(|w| w[0].modulus() == w[1].modulus());
    if same_level {
        let distinct: BTreeSet<_> = fs.iter().map(Coset::base).collect();
        if distinct.len() == fs.len() {
            return Ok(());
        }
    } else {
        let clash = (0..fs.len())
            .flat_map(|i| (i + 1..fs.len()).map(move |j| (i, j)))
            .find(|&(i, j)| fs[i].intersect(ring, &fs[j]).is_some());
        if clash.is_none() {
            return Ok(());
        }
    }
    Err(Error::InvalidProjectionFamily(
        fs.iter().map(|f| f.show(ring)).collect::<Vec<_>>().join(", "),
    ))
}

/// `Σ_i f_i y f_i` for pairwise orthogonal coset projections `f_i`.
pub fn compress_phi(y: &AlgebraElement, fs: &[Coset]) -> Result<AlgebraElement> {
    let ring = y.ring();
    check_orthogonal(ring, fs)?;
    let one = ring.one();
    let zero = ring.zero();
    let mut raw = Vec::new();
    for f in fs {
        let pf = Monomial::normalize(ring, &one, f, &zero, &one)?.expect("cosets are nonempty");
        for (t, v) in y.terms() {
            if let Some(x) = t.compose(ring, &pf).and_then(|x| pf.compose(ring, &x)) {
                raw.push((x, v.clone()));
            }
        }
    }
    Ok(AlgebraElement::from_terms(ring, raw))
}

/// The isometry `s = u^{ν_j} s_μ` with `s* y s = 1`.
#[derive(Debug, Clone)]
pub struct Witness {
    pub s: AlgebraElement,
    pub j: usize,
    /// Values of the diagonal part on the atoms.
    pub lambdas: Vec<Scalar>,
    pub family: SeparatingFamily,
}

/// For self-adjoint `y` whose diagonal part has sup norm exactly 1, finds an
/// atom where the diagonal part equals 1 and returns the corresponding
/// isometry, after checking `s*s = 1`, `ss* = f_j` and `s*ys = 1`.
pub fn pi_witness(y: &AlgebraElement) -> Result<Witness> {
    let ring = y.ring();
    if !y.is_self_adjoint() {
        return Err(Error::DomainError(format!("{} is not self-adjoint", y.show())));
    }
    let theta = y.diagonal_part();
    let norm_sq = theta.sup_norm_sq();
    if norm_sq != BigRational::one() {
        return Err(Error::WitnessNotFound(format!("diagonal part has squared norm {norm_sq}")));
    }
    let family = choose_separating(y);
    let lambdas: Vec<Scalar> = family.atoms.iter().map(|n| theta.value_at(ring, n)).collect();
    let j = lambdas
        .iter()
        .position(Scalar::is_one)
        .ok_or_else(|| Error::WitnessNotFound("no atom where the diagonal part equals 1".into()))?;
    let s = &AlgebraElement::u(ring, &family.nus[j]) * &AlgebraElement::s(ring, &family.mu)?;
    let s_star = s.adjoint();
    let one = AlgebraElement::one(ring);
    if &s_star * &s != one {
        return Err(Error::WitnessNotFound("s*s != 1".into()));
    }
    if &s * &s_star != AlgebraElement::p(ring, &family.projections[j]) {
        return Err(Error::WitnessNotFound("ss* != f_j".into()));
    }
    if &(&s_star * y) * &s != one {
        return Err(Error::WitnessNotFound("s*ys != 1".into()));
    }
    Ok(Witness { s, j, lambdas, family })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::ExpectationMode;

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
    fn e2_plus_s2() {
        let r = z();
        let y = &AlgebraElement::e(&r, &n(2)).unwrap() + &AlgebraElement::s(&r, &n(2)).unwrap();
        let fam = choose_separating(&y);
        assert_eq!(fam.level, n(2));
        assert_eq!(fam.atoms, vec![n(0)]);
        assert_eq!(fam.nus, vec![n(2)]);
        assert_eq!(fam.mu, n(8));
        assert_eq!(fam.projections, vec![cz(2, 8)]);
        fam.check(&r).unwrap();
        let c = compress_phi(&y, &fam.projections).unwrap();
        assert_eq!(c, AlgebraElement::p(&r, &cz(2, 8)));
        assert_eq!(c, fam.phi(&r, &y.expectation(ExpectationMode::Full).unwrap().diagonal_part()));
    }

    #[test]
    fn e2_and_one() {
        let r = z();
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        let fam = choose_separating(&e2);
        assert_eq!((fam.nus.clone(), fam.mu.clone()), (vec![n(0)], n(4)));
        assert_eq!(compress_phi(&e2, &fam.projections).unwrap(), AlgebraElement::e(&r, &n(4)).unwrap());
        let w = pi_witness(&e2).unwrap();
        assert_eq!(w.s, AlgebraElement::s(&r, &n(4)).unwrap());

        let one = AlgebraElement::one(&r);
        let w = pi_witness(&one).unwrap();
        assert_eq!(w.family.level, n(1));
        assert_eq!(w.s, AlgebraElement::s(&r, &n(2)).unwrap());
        assert!(compress_phi(&AlgebraElement::zero(&r), &[]).unwrap().is_zero());
    }

    #[test]
    fn half_weighted_witness() {
        let r = z();
        let y = &AlgebraElement::p(&r, &cz(0, 2)) + &AlgebraElement::p(&r, &cz(1, 2)).scale(&Scalar::ratio(1, 2));
        let w = pi_witness(&y).unwrap();
        assert_eq!(w.lambdas, vec![Scalar::one(), Scalar::ratio(1, 2)]);
        assert!(w.family.projections[w.j].is_subset(&r, &cz(0, 2)));
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        assert!(matches!(pi_witness(&e2.scale(&Scalar::ratio(1, 2))), Err(Error::WitnessNotFound(_))));
        assert!(matches!(pi_witness(&AlgebraElement::s(&r, &n(2)).unwrap()), Err(Error::DomainError(_))));
    }

    #[test]
    fn overlapping_family_is_rejected() {
        let r = z();
        let y = AlgebraElement::one(&r);
        let bad = [cz(0, 2), cz(0, 4)];
        assert!(matches!(compress_phi(&y, &bad), Err(Error::InvalidProjectionFamily(_))));
        assert!(matches!(compress_phi(&y, &[cz(1, 4), cz(1, 4)]), Err(Error::InvalidProjectionFamily(_))));
    }
}
