mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use common::{number_ring_and_rng, sampler};
use regalg_core::bost_connes::{
    bc_f_by_rep, bc_s, kms_residual, kms_value, orbit_of, pi_alpha_apply, unit_orbits, GaloisParameter, KmsConfig,
};
use regalg_core::{AlgebraElement, Ring, RingElement, Scalar};

/// `Σ c s_p f(m, n) s_q*` with small `p, q, m`.
fn bc_element(ring: &Ring, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let s = sampler(ring);
    let small = ring.canonical_elements_up_to_norm(10);
    let mods = ring.canonical_elements_up_to_norm(8);
    let mut x = AlgebraElement::zero(ring);
    for _ in 0..rng.random_range(1..=3) {
        let (p, q) = (small.choose(rng).unwrap(), small.choose(rng).unwrap());
        let m = mods.choose(rng).unwrap();
        let n = ring.residues(m).unwrap().choose(rng).unwrap().clone();
        let word = &(&bc_s(ring, p).unwrap() * &bc_f_by_rep(ring, m, &n).unwrap()) * &bc_s(ring, q).unwrap().adjoint();
        x = &x + &word.scale(&s.scalar(rng));
    }
    x
}

type Vector = BTreeMap<RingElement, Scalar>;

fn apply(x: &AlgebraElement, v: &Vector) -> Vector {
    let alpha = GaloisParameter::trivial();
    let mut out = Vector::new();
    for (r, w) in v {
        for (c, s) in pi_alpha_apply(x, &alpha, r).unwrap() {
            *out.entry(s).or_insert_with(Scalar::zero) += &(&c * w);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn basis(r: &RingElement) -> Vector {
    Vector::from([(r.clone(), Scalar::one())])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn class_representation_is_a_star_homomorphism((ring, mut rng) in number_ring_and_rng()) {
        let (x, y) = (bc_element(&ring, &mut rng), bc_element(&ring, &mut rng));
        let (xy, xs) = (&x * &y, x.adjoint());
        let window = ring.canonical_elements_up_to_norm(30);
        for r in &window {
            prop_assert_eq!(apply(&xy, &basis(r)), apply(&x, &apply(&y, &basis(r))));
            for s in &window {
                // <π(x) ξ_r, ξ_s> = conj <π(x*) ξ_s, ξ_r>
                let lhs = apply(&x, &basis(r)).get(s).cloned().unwrap_or_else(Scalar::zero);
                let rhs = apply(&xs, &basis(s)).get(r).cloned().unwrap_or_else(Scalar::zero).conj();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn state_is_positive_and_kms((ring, mut rng) in number_ring_and_rng()) {
        let beta = [1.5, 2.0, 3.0][rng.random_range(0..3)];
        let cfg = KmsConfig::new(beta, 300).unwrap();
        let alpha = GaloisParameter::trivial();
        prop_assert_eq!(kms_value(&AlgebraElement::one(&ring), &cfg, &alpha).unwrap().value, 1.0);
        let (a, b) = (bc_element(&ring, &mut rng), bc_element(&ring, &mut rng));
        let sq = kms_value(&(&a.adjoint() * &a), &cfg, &alpha).unwrap();
        prop_assert!(sq.value >= -sq.error_bound, "{sq:?}");
        let (residual, bound) = kms_residual(&a, &b, &cfg, &alpha).unwrap();
        prop_assert!(residual <= bound, "{residual} > {bound}");
    }

    #[test]
    fn orbits_partition_residues((ring, mut rng) in number_ring_and_rng()) {
        let mods = ring.nonunits_up_to_norm(40);
        let m = mods.choose(&mut rng).unwrap();
        let orbits = unit_orbits(&ring, m).unwrap();
        let mut seen: Vec<RingElement> = orbits.iter().flat_map(|o| o.members.clone()).collect();
        let total = seen.len();
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), total);
        let mut residues = ring.residues(m).unwrap();
        residues.sort();
        prop_assert_eq!(seen, residues);
        for o in &orbits {
            for r in &o.members {
                prop_assert_eq!(&orbit_of(&ring, m, r).unwrap(), o);
            }
        }
    }
}
