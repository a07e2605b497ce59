//! Criterion benchmarks for `regalg-core` live in `benches/`.
