mod common;

use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

use common::{number_ring_and_rng, ring_and_rng, sampler};
use regalg_core::adele::{axb_act, axb_act_adele, divisor_closure, tower_embed, AxBElement, TowerElement};
use regalg_core::sample::{base_modulus, Sampler};
use regalg_core::{Fraction, Ring, RingElement};

fn nonzero(s: &Sampler, ring: &Ring, rng: &mut ChaCha8Rng) -> RingElement {
    loop {
        let r = s.element(rng);
        if !ring.is_zero(&r) {
            return r;
        }
    }
}

fn fraction(s: &Sampler, ring: &Ring, rng: &mut ChaCha8Rng) -> Fraction {
    Fraction::new(ring, s.element(rng), nonzero(s, ring, rng)).unwrap()
}

fn affine(s: &Sampler, ring: &Ring, rng: &mut ChaCha8Rng) -> AxBElement {
    let a = Fraction::new(ring, nonzero(s, ring, rng), nonzero(s, ring, rng)).unwrap();
    AxBElement::new(ring, a, fraction(s, ring, rng)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tower_operations_stay_compatible((ring, mut rng) in number_ring_and_rng()) {
        let s = sampler(&ring);
        let levels = divisor_closure(&ring, &ring.pow(&base_modulus(&ring), 2)).unwrap();
        let (x, y) = (s.element(&mut rng), s.element(&mut rng));
        let (ex, ey) = (tower_embed(&ring, &x, &levels).unwrap(), tower_embed(&ring, &y, &levels).unwrap());
        for t in [ex.add(&ring, &ey).unwrap(), ex.mul(&ring, &ey).unwrap(), ex.scale(&ring, &y)] {
            prop_assert!(TowerElement::new(&ring, t.data().clone()).is_ok());
        }
        prop_assert_eq!(ex.add(&ring, &ey).unwrap(), tower_embed(&ring, &ring.add(&x, &y), &levels).unwrap());
        prop_assert_eq!(ex.mul(&ring, &ey).unwrap(), tower_embed(&ring, &ring.mul(&x, &y), &levels).unwrap());
    }

    #[test]
    fn affine_group_acts((ring, mut rng) in ring_and_rng()) {
        let s = sampler(&ring);
        let (g, h) = (affine(&s, &ring, &mut rng), affine(&s, &ring, &mut rng));
        let c = s.coset(&mut rng);
        let hc = axb_act(&ring, &h, &c);
        prop_assert_eq!(axb_act_adele(&ring, &g, &hc), axb_act(&ring, &g.compose(&ring, &h), &c));
        prop_assert_eq!(axb_act_adele(&ring, &g.inverse(&ring), &axb_act(&ring, &g, &c)), axb_act(&ring, &AxBElement::identity(&ring), &c));
        prop_assert_eq!(g.compose(&ring, &g.inverse(&ring)), AxBElement::identity(&ring));
    }

    #[test]
    fn integral_maps_keep_integral_cosets((ring, mut rng) in ring_and_rng()) {
        let s = sampler(&ring);
        let g = AxBElement::new(
            &ring,
            Fraction::integer(&ring, nonzero(&s, &ring, &mut rng)),
            Fraction::integer(&ring, s.element(&mut rng)),
        ).unwrap();
        prop_assert!(g.is_integral(&ring));
        let out = axb_act(&ring, &g, &s.coset(&mut rng));
        prop_assert!(ring.is_one(&out.level), "{}", out.show(&ring));
    }
}
