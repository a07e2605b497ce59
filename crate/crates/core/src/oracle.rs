//! Brute-force semantics on `ℓ²(R)`: every word acts on basis vectors `ξ_r`
//! as a weighted partial affine map. Shares no code with the symbolic
//! product; domains are found by enumerating residues.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::affine::PartialAffineMap;
use crate::coset::Coset;
use crate::error::Result;
use crate::ring::{Fraction, Ring, RingElement};
use crate::scalar::Scalar;
use crate::star::{AlgebraElement, Generator, Monomial};

/// Finite vector `Σ v_r ξ_r`, zeros omitted.
pub type Vector = BTreeMap<RingElement, Scalar>;

/// `{r : N(r) <= bound}` in norm-then-element order.
#[derive(Debug, Clone)]
pub struct Window {
    pub ring: Ring,
    pub bound: u64,
    pub elements: Vec<RingElement>,
}

impl Window {
    pub fn new(ring: &Ring, bound: u64) -> Window {
        Window { ring: ring.clone(), bound, elements: ring.elements_up_to_norm(bound) }
    }
}

fn push(out: &mut Vector, r: RingElement, v: Scalar) {
    let slot = out.entry(r.clone()).or_insert_with(Scalar::zero);
    *slot += &v;
    if slot.is_zero() {
        out.remove(&r);
    }
}

/// Image of `ξ_r` under one word `s_m* p_c u^k s_{m'}`.
pub fn apply_monomial(ring: &Ring, t: &Monomial, r: &RingElement) -> Option<RingElement> {
    let v = ring.add(&ring.mul(t.mp(), r), t.k());
    if !ring.congruent(&v, t.c().base(), t.c().modulus()) {
        return None;
    }
    ring.exact_div(&v, t.m())
}

/// `x ξ_r`, coefficients on equal basis vectors summed.
pub fn apply_element(x: &AlgebraElement, r: &RingElement) -> Vector {
    let ring = x.ring();
    let mut out = Vector::new();
    for (t, v) in x.terms() {
        if let Some(s) = apply_monomial(ring, t, r) {
            push(&mut out, s, v.clone());
        }
    }
    out
}

/// `x` applied to a finite vector.
pub fn apply_to_vector(x: &AlgebraElement, vec: &Vector) -> Vector {
    let mut out = Vector::new();
    for (r, w) in vec {
        for (s, v) in apply_element(x, r) {
            push(&mut out, s, &v * w);
        }
    }
    out
}

/// Generator action straight from the regular representation.
pub fn apply_generator(ring: &Ring, g: &Generator, r: &RingElement) -> Option<RingElement> {
    match g {
        Generator::S(m) => Some(ring.mul(m, r)),
        Generator::SStar(m) => ring.exact_div(r, m),
        Generator::U(n) => Some(ring.add(r, n)),
        Generator::E(m) => ring.divides(m, r).then(|| r.clone()),
        Generator::P(c) => ring.congruent(r, c.base(), c.modulus()).then(|| r.clone()),
        Generator::Axb(a, b) => Some(ring.add(&ring.mul(a, r), b)),
    }
}

/// A word in the generators, rightmost letter applied first.
pub fn apply_word(ring: &Ring, word: &[Generator], r: &RingElement) -> Option<RingElement> {
    word.iter().rev().try_fold(r.clone(), |acc, g| apply_generator(ring, g, &acc))
}

/// Smallest coset containing the listed residues mod `level`, provided they
/// form one.
fn rebuild_coset(ring: &Ring, level: &RingElement, hits: &[RingElement]) -> Option<Coset> {
    let first = hits.first()?;
    let modulus = hits
        .iter()
        .fold(level.clone(), |g, h| ring.gcd(&g, &ring.sub(h, first)));
    let c = Coset::new(ring, first.clone(), modulus).ok()?;
    let expected = ring.norm_index(level).ok()? / ring.norm_index(c.modulus()).ok()?;
    assert_eq!(
        expected,
        num_bigint::BigUint::from(hits.len()),
        "partial-map domains are cosets"
    );
    Some(c)
}

/// `(a, b, domain)` with the domain found by brute force over residues of the
/// word's modulus.
pub fn term_to_partial_map(ring: &Ring, t: &Monomial) -> PartialAffineMap {
    let level = t.c().modulus();
    let hits: Vec<RingElement> = ring
        .residues(level)
        .expect("nonzero modulus")
        .into_iter()
        .filter(|r| apply_monomial(ring, t, r).is_some())
        .collect();
    PartialAffineMap {
        a: Fraction::new(ring, t.mp().clone(), t.m().clone()).unwrap(),
        b: Fraction::new(ring, t.k().clone(), t.m().clone()).unwrap(),
        domain: rebuild_coset(ring, level, &hits).expect("canonical words have nonempty domains"),
    }
}

/// `x ∘ y` by enumerating residues at a level where membership is periodic.
pub fn compose(ring: &Ring, x: &PartialAffineMap, y: &PartialAffineMap) -> Option<PartialAffineMap> {
    let level = ring.lcm(
        y.domain.modulus(),
        &ring.mul(x.domain.modulus(), y.a.den()),
    );
    let hits: Vec<RingElement> = ring
        .residues(&level)
        .expect("nonzero level")
        .into_iter()
        .filter(|r| y.apply(ring, r).is_some_and(|s| x.domain.contains(ring, &s)))
        .collect();
    let domain = rebuild_coset(ring, &level, &hits)?;
    Some(PartialAffineMap {
        a: x.a.mul(ring, &y.a),
        b: x.a.mul(ring, &y.b).add(ring, &x.b),
        domain,
    })
}

/// Agreement of `x` and `y` on every `ξ_r` in the window.
pub fn oracle_equal(x: &AlgebraElement, y: &AlgebraElement, w: &Window) -> bool {
    w.elements.iter().all(|r| apply_element(x, r) == apply_element(y, r))
}

/// First window point where `x ≠ y`.
pub fn oracle_diff(x: &AlgebraElement, y: &AlgebraElement, w: &Window) -> Option<RingElement> {
    w.elements.iter().find(|r| apply_element(x, r) != apply_element(y, r)).cloned()
}

fn inner(u: &Vector, v: &Vector) -> Scalar {
    // <u, v>, conjugate-linear in u
    u.iter()
        .filter_map(|(r, a)| v.get(r).map(|b| &a.conj() * b))
        .fold(Scalar::zero(), |acc, z| acc + z)
}

fn basis(r: &RingElement) -> Vector {
    Vector::from([(r.clone(), Scalar::one())])
}

/// `<x ξ_r, ξ_s> = <ξ_r, x* ξ_s>` on all window pairs.
pub fn check_adjointness(x: &AlgebraElement, w: &Window) -> Option<(RingElement, RingElement)> {
    let xs = x.adjoint();
    for r in &w.elements {
        let xr = apply_element(x, r);
        for s in &w.elements {
            let lhs = inner(&xr, &basis(s));
            let rhs = inner(&basis(r), &apply_element(&xs, s));
            if lhs != rhs {
                return Some((r.clone(), s.clone()));
            }
        }
    }
    None
}

/// Gram matrix `<x ξ_s, x ξ_r>` over the window, i.e. the window block of
/// `x*x`.
pub fn gram_matrix(x: &AlgebraElement, w: &Window) -> DMatrix<Complex64> {
    let images: Vec<Vector> = w.elements.iter().map(|r| apply_element(x, r)).collect();
    let n = images.len();
    DMatrix::from_fn(n, n, |i, j| {
        let (re, im) = inner(&images[i], &images[j]).to_f64();
        Complex64::new(re, im)
    })
}

/// Smallest eigenvalue of the window block of `x*x`.
pub fn min_eigenvalue_of_square(x: &AlgebraElement, w: &Window) -> f64 {
    let g = gram_matrix(x, w);
    if g.nrows() == 0 {
        return 0.0;
    }
    SymmetricEigen::new(g).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Which letter sequence on each side of a relation.
type RelationInstance = (String, Vec<Generator>, Vec<Generator>);

/// The defining relations checked pointwise on the window with
/// [`apply_word`]; returns the first failing instance.
pub fn check_relations(ring: &Ring, ms: &[RingElement], w: &Window) -> Result<Option<String>> {
    let mut instances: Vec<RelationInstance> = Vec::new();
    for k in ms {
        for m in ms {
            instances.push((
                format!("s_{} s_{}", ring.show(k), ring.show(m)),
                vec![Generator::S(k.clone()), Generator::S(m.clone())],
                vec![Generator::S(ring.mul(k, m))],
            ));
        }
    }
    for m in ms {
        for n in ring.residues(m)? {
            instances.push((
                format!("u^{} u^{}", ring.show(m), ring.show(&n)),
                vec![Generator::U(m.clone()), Generator::U(n.clone())],
                vec![Generator::U(ring.add(m, &n))],
            ));
            instances.push((
                format!("s_{} u^{}", ring.show(m), ring.show(&n)),
                vec![Generator::S(m.clone()), Generator::U(n.clone())],
                vec![Generator::U(ring.mul(m, &n)), Generator::S(m.clone())],
            ));
        }
    }
    for (name, lhs, rhs) in &instances {
        for r in &w.elements {
            if apply_word(ring, lhs, r) != apply_word(ring, rhs, r) {
                return Ok(Some(format!("{name} at {}", ring.show(r))));
            }
        }
    }
    // Σ_n u^n e_m u^{-n} ξ_r: exactly one n fires, with image r
    for m in ms {
        let residues = ring.residues(m)?;
        for r in &w.elements {
            let images: Vec<RingElement> = residues
                .iter()
                .filter_map(|n| {
                    let word = [Generator::U(n.clone()), Generator::E(m.clone()), Generator::U(ring.neg(n))];
                    apply_word(ring, &word, r)
                })
                .collect();
            if images != vec![r.clone()] {
                return Ok(Some(format!("partition of unity mod {} at {}", ring.show(m), ring.show(r))));
            }
        }
    }
    Ok(None)
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

    #[test]
    fn partial_maps() {
        let r = z();
        let s2s = AlgebraElement::s_star(&r, &n(2)).unwrap();
        let t = s2s.terms().keys().next().unwrap();
        let map = term_to_partial_map(&r, t);
        assert_eq!(map.a, Fraction::new(&r, n(1), n(2)).unwrap());
        assert_eq!(map.domain, Coset::new(&r, n(0), n(2)).unwrap());
        let u3 = AlgebraElement::u(&r, &n(3));
        let map = term_to_partial_map(&r, u3.terms().keys().next().unwrap());
        assert_eq!((map.b.clone(), map.domain.clone()), (Fraction::integer(&r, n(3)), Coset::full(&r)));
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        let map = term_to_partial_map(&r, e2.terms().keys().next().unwrap());
        assert_eq!(map.domain, Coset::new(&r, n(0), n(2)).unwrap());
    }

    #[test]
    fn applying() {
        let r = z();
        let x = &AlgebraElement::u(&r, &n(1)) * &AlgebraElement::s(&r, &n(2)).unwrap();
        assert_eq!(apply_element(&x, &n(3)), basis(&n(7)));
        let s2s = AlgebraElement::s_star(&r, &n(2)).unwrap();
        assert!(apply_element(&s2s, &n(3)).is_empty());
        assert_eq!(apply_element(&s2s, &n(4)), basis(&n(2)));
    }

    #[test]
    fn equality_on_windows() {
        let r = z();
        let w = Window::new(&r, 20);
        let s2 = AlgebraElement::s(&r, &n(2)).unwrap();
        let s2s = AlgebraElement::s_star(&r, &n(2)).unwrap();
        let e2 = AlgebraElement::e(&r, &n(2)).unwrap();
        assert!(oracle_equal(&(&s2 * &s2s), &e2, &w));
        let lhs = &AlgebraElement::u(&r, &n(2)) * &s2;
        let rhs = &s2 * &AlgebraElement::u(&r, &n(1));
        assert!(oracle_equal(&lhs, &rhs, &w));
        assert!(!oracle_equal(&e2, &AlgebraElement::one(&r), &w));
        assert_eq!(oracle_diff(&e2, &AlgebraElement::one(&r), &w), Some(n(-1)));
    }

    #[test]
    fn adjoint_example_and_positivity() {
        let r = z();
        let w = Window::new(&r, 12);
        let p = AlgebraElement::p(&r, &Coset::new(&r, n(1), n(4)).unwrap());
        let x = &(&AlgebraElement::s_star(&r, &n(2)).unwrap() * &p) * &AlgebraElement::s(&r, &n(3)).unwrap();
        assert!(check_adjointness(&x, &w).is_none());
        let want = &(&AlgebraElement::s_star(&r, &n(3)).unwrap() * &p) * &AlgebraElement::s(&r, &n(2)).unwrap();
        assert!(oracle_equal(&x.adjoint(), &want, &w));
        let y = &x + &AlgebraElement::e(&r, &n(3)).unwrap();
        assert!(min_eigenvalue_of_square(&y, &w) >= -1e-9);
    }

    #[test]
    fn relations_under_the_oracle() {
        let r = z();
        let w = Window::new(&r, 30);
        assert_eq!(check_relations(&r, &[n(2), n(3)], &w).unwrap(), None);
    }
}
