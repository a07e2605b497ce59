#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regalg_core::sample::Sampler;
use regalg_core::Ring;

/// ℤ, ℤ[i], ℤ[ω], 𝔽₃[T], 𝔽₄[T].
pub fn rings() -> Vec<Ring> {
    vec![
        Ring::integers(),
        Ring::gaussian(),
        Ring::eisenstein(),
        Ring::poly_fq(3).unwrap(),
        Ring::poly_fq(4).unwrap(),
    ]
}

pub fn number_rings() -> Vec<Ring> {
    rings().into_iter().take(3).collect()
}

/// A ring and a seeded generator; shrinking moves towards ℤ and seed 0.
pub fn ring_and_rng() -> impl Strategy<Value = (Ring, ChaCha8Rng)> {
    (0..rings().len(), any::<u64>()).prop_map(|(i, seed)| (rings()[i].clone(), ChaCha8Rng::seed_from_u64(seed)))
}

pub fn number_ring_and_rng() -> impl Strategy<Value = (Ring, ChaCha8Rng)> {
    (0..3usize, any::<u64>()).prop_map(|(i, seed)| (number_rings()[i].clone(), ChaCha8Rng::seed_from_u64(seed)))
}

pub fn sampler(ring: &Ring) -> Sampler {
    Sampler::standard(ring)
}
