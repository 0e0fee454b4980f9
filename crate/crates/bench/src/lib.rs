//! Criterion benchmarks for filoop; see `benches/`.
