mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::Rng;

use common::ring_and_rng;
use regalg_core::Ring;

fn pick(ring: &Ring, rng: &mut impl Rng, bound: u64) -> regalg_core::RingElement {
    ring.elements_up_to_norm(bound).choose(rng).unwrap().clone()
}

fn nonzero(ring: &Ring, rng: &mut impl Rng, bound: u64) -> regalg_core::RingElement {
    loop {
        let x = pick(ring, rng, bound);
        if !ring.is_zero(&x) {
            return x;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn residues_are_a_transversal((ring, mut rng) in ring_and_rng()) {
        let m = nonzero(&ring, &mut rng, 80);
        let res = ring.residues(&m).unwrap();
        prop_assert_eq!(BigUint::from(res.len()), ring.norm_index(&m).unwrap());
        for (i, a) in res.iter().enumerate() {
            for b in &res[i + 1..] {
                prop_assert!(!ring.divides(&m, &ring.sub(a, b)));
            }
            prop_assert_eq!(&ring.reduce(a, &m), a);
        }
        let x = pick(&ring, &mut rng, 500);
        prop_assert!(res.contains(&ring.reduce(&x, &m)));
        prop_assert!(ring.congruent(&x, &ring.reduce(&x, &m), &m));
    }

    #[test]
    fn norm_is_multiplicative((ring, mut rng) in ring_and_rng()) {
        let (a, b) = (pick(&ring, &mut rng, 300), pick(&ring, &mut rng, 300));
        prop_assert_eq!(ring.norm(&ring.mul(&a, &b)), ring.norm(&a) * ring.norm(&b));
    }

    #[test]
    fn bezout((ring, mut rng) in ring_and_rng()) {
        let (a, b) = (pick(&ring, &mut rng, 400), pick(&ring, &mut rng, 400));
        prop_assume!(!ring.is_zero(&a) || !ring.is_zero(&b));
        let (g, s, t) = ring.xgcd(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&s, &a), &ring.mul(&t, &b)), g.clone());
        prop_assert!(ring.divides(&g, &a) && ring.divides(&g, &b));
        prop_assert!(ring.is_canonical(&g));
    }

    #[test]
    fn one_canonical_associate((ring, mut rng) in ring_and_rng()) {
        let x = nonzero(&ring, &mut rng, 400);
        let associates: BTreeSet<_> = ring.units().iter().map(|u| ring.mul(u, &x)).collect();
        let canonical: Vec<_> = associates.iter().filter(|y| ring.is_canonical(y)).collect();
        prop_assert_eq!(canonical.len(), 1);
        let (u, c) = ring.canonical_associate(&x).unwrap();
        prop_assert_eq!(canonical[0], &c);
        prop_assert_eq!(ring.mul(&u, &x), c);
        for y in &associates {
            prop_assert_eq!(ring.canonical(y), ring.canonical(&x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorizations_multiply_back((ring, mut rng) in ring_and_rng()) {
        let x = nonzero(&ring, &mut rng, 1000);
        prop_assume!(!ring.is_unit(&x));
        let f = ring.factor(&x).unwrap();
        let back = f.factors.iter().fold(f.unit.clone(), |acc, (p, e)| ring.mul(&acc, &ring.pow(p, *e)));
        prop_assert_eq!(back, x);
        for (p, _) in &f.factors {
            prop_assert!(ring.is_canonical(p));
            if ring.norm_u64(p) > 256 {
                continue;
            }
            // R/(p) has no zero divisors
            let res = ring.residues(p).unwrap();
            for a in res.iter().skip(1) {
                for b in res.iter().skip(1) {
                    prop_assert!(!ring.divides(p, &ring.mul(a, b)));
                }
            }
        }
    }
}
