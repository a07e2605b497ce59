use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use regalg_core::adele::{divisor_closure, quotient_iso_check};
use regalg_core::bost_connes::{bc_f_by_rep, kms_value, GaloisParameter, KmsConfig};
use regalg_core::oracle::{self, Window};
use regalg_core::sample::Sampler;
use regalg_core::star::{choose_separating, verify_defining_relations};
use regalg_core::{AlgebraElement, ExpectationMode, Ring};

fn rings() -> Vec<Ring> {
    vec![Ring::integers(), Ring::gaussian(), Ring::eisenstein(), Ring::poly_fq(3).unwrap()]
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("product");
    for ring in rings() {
        let s = Sampler::standard(&ring);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pairs: Vec<_> = (0..64).map(|_| (s.algebra_element(&mut rng, 4), s.algebra_element(&mut rng, 4))).collect();
        g.bench_with_input(BenchmarkId::new("symbolic", ring.flag()), &pairs, |b, pairs| {
            b.iter(|| pairs.iter().map(|(x, y)| (x * y).len()).sum::<usize>())
        });
        g.bench_with_input(BenchmarkId::new("rewrite", ring.flag()), &pairs, |b, pairs| {
            b.iter(|| pairs.iter().map(|(x, y)| x.mul_rewrite(y).unwrap().len()).sum::<usize>())
        });
    }
    g.finish();
}

fn expectation_and_separation(c: &mut Criterion) {
    let mut g = c.benchmark_group("expectation");
    for ring in rings() {
        let s = Sampler::standard(&ring);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ys: Vec<AlgebraElement> = (0..32).map(|_| s.algebra_element(&mut rng, 6)).collect();
        g.bench_with_input(BenchmarkId::new("full", ring.flag()), &ys, |b, ys| {
            b.iter(|| ys.iter().map(|y| y.expectation(ExpectationMode::Full).unwrap().len()).sum::<usize>())
        });
        g.bench_with_input(BenchmarkId::new("choose_separating", ring.flag()), &ys, |b, ys| {
            b.iter(|| ys.iter().map(|y| choose_separating(y).atoms.len()).sum::<usize>())
        });
    }
    g.finish();
}

fn oracle_window(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    for ring in rings() {
        let s = Sampler::standard(&ring);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = s.algebra_element(&mut rng, 4);
        let w = Window::new(&ring, 50);
        g.bench_function(BenchmarkId::new("window_50", ring.flag()), |b| {
            b.iter(|| w.elements.iter().map(|r| oracle::apply_element(&x, r).len()).sum::<usize>())
        });
    }
    g.finish();
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations");
    g.sample_size(10);
    for ring in rings() {
        let ms = ring.nonunits_up_to_norm(20);
        g.bench_function(BenchmarkId::new("norm_20", ring.flag()), |b| {
            b.iter(|| verify_defining_relations(&ring, black_box(&ms), None).passed())
        });
    }
    g.finish();
}

fn profinite(c: &mut Criterion) {
    let mut g = c.benchmark_group("profinite");
    g.sample_size(10);
    for ring in rings() {
        let l = ring.pow(&ring.smallest_prime(), 3);
        let levels = divisor_closure(&ring, &ring.mul(&l, &ring.smallest_prime())).unwrap();
        g.bench_function(BenchmarkId::new("quotient_iso", ring.flag()), |b| {
            b.iter(|| quotient_iso_check(&ring, &l, &levels).unwrap().passed())
        });
    }
    g.finish();
}

fn kms(c: &mut Criterion) {
    let mut g = c.benchmark_group("kms");
    g.sample_size(10);
    for ring in [Ring::integers(), Ring::gaussian()] {
        let x = bc_f_by_rep(&ring, &ring.from_i64(2), &ring.zero()).unwrap();
        let cfg = KmsConfig::new(2.0, 2000).unwrap();
        let alpha = GaloisParameter::trivial();
        g.bench_function(BenchmarkId::new("f_2_0_trunc_2000", ring.flag()), |b| {
            b.iter(|| kms_value(&x, &cfg, &alpha).unwrap().value)
        });
    }
    g.finish();
}

criterion_group!(benches, products, expectation_and_separation, oracle_window, relations, profinite, kms);
criterion_main!(benches);
