//! Criterion benchmarks for the nilmat kernels live under `benches/`.
