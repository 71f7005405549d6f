//! Criterion benchmarks for twk-core live under `benches/`.
