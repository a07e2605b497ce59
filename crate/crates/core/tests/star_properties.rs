mod common;

use proptest::prelude::*;

use common::{ring_and_rng, sampler};
use regalg_core::star::{choose_separating, pi_witness};
use regalg_core::{AlgebraElement, ExpectationMode, Monomial};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn product_is_associative((ring, mut rng) in ring_and_rng()) {
        let s = sampler(&ring);
        let [x, y, z] = [0; 3].map(|_| AlgebraElement::monomial(&ring, s.monomial(&mut rng)));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn adjoint_is_an_involution((ring, mut rng) in ring_and_rng()) {
        let s = sampler(&ring);
        let (x, y) = (s.algebra_element(&mut rng, 3), s.algebra_element(&mut rng, 3));
        prop_assert_eq!((&x * &y).adjoint(), &y.adjoint() * &x.adjoint());
        prop_assert_eq!(x.adjoint().adjoint(), x.clone());
        prop_assert_eq!(x.mul_rewrite(&y).unwrap(), &x * &y);
    }

    #[test]
    fn monomials_are_partial_affine_maps((ring, mut rng) in ring_and_rng()) {
        let t = sampler(&ring).monomial(&mut rng);
        let map = t.to_map(&ring);
        prop_assert_eq!(Monomial::from_map(&ring, &map).unwrap(), Some(t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expectation_is_a_bimodule_map((ring, mut rng) in ring_and_rng()) {
        let s = sampler(&ring);
        let x = s.algebra_element(&mut rng, 4);
        let d1 = AlgebraElement::monomial(&ring, s.projection(&mut rng)).scale(&s.scalar(&mut rng));
        let d2 = AlgebraElement::monomial(&ring, s.projection(&mut rng));
        let e = |y: &AlgebraElement| y.expectation(ExpectationMode::Full).unwrap();
        prop_assert_eq!(e(&(&(&d1 * &x) * &d2)), &(&d1 * &e(&x)) * &d2);
        prop_assert_eq!(e(&e(&x)), e(&x));
        prop_assert!(e(&x).terms().keys().all(|t| t.is_diagonal(&ring)));
    }

    #[test]
    fn expectation_factors_through_both_averages((ring, mut rng) in ring_and_rng()) {
        let x = sampler(&ring).algebra_element(&mut rng, 5);
        let mult = x.expectation(ExpectationMode::Multiplicative).unwrap();
        let add = mult.expectation(ExpectationMode::Additive).unwrap();
        prop_assert_eq!(x.expectation(ExpectationMode::Full).unwrap(), add.clone());
        prop_assert_eq!(mult.expectation(ExpectationMode::Multiplicative).unwrap(), mult);
        prop_assert_eq!(add.expectation(ExpectationMode::Additive).unwrap(), add);
    }

    #[test]
    fn expectation_is_faithful((ring, mut rng) in ring_and_rng()) {
        let x = sampler(&ring).algebra_element(&mut rng, 4);
        prop_assume!(!x.is_zero());
        let xx = &x.adjoint() * &x;
        prop_assert!(!xx.expectation(ExpectationMode::Full).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn separating_family_conditions((ring, mut rng) in ring_and_rng()) {
        let y = sampler(&ring).algebra_element(&mut rng, 6);
        let fam = choose_separating(&y);
        prop_assert_eq!(fam.check(&ring), Ok(()));
    }

    #[test]
    fn witness_identity((ring, mut rng) in ring_and_rng()) {
        let s = sampler(&ring);
        let d = AlgebraElement::diagonal(&ring, &s.diagonal_weight(&mut rng));
        let t = AlgebraElement::monomial(&ring, s.monomial(&mut rng)).scale(&s.scalar(&mut rng));
        let y = &d + &(&t + &t.adjoint());
        // whenever a witness is returned it is one
        if let Ok(w) = pi_witness(&y) {
            let ss = w.s.adjoint();
            prop_assert!((&ss * &w.s) == AlgebraElement::one(&ring));
            prop_assert!((&(&ss * &y) * &w.s) == AlgebraElement::one(&ring));
        }
    }
}
