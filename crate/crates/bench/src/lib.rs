//! Criterion benchmarks for weylstab; see `benches/`.
