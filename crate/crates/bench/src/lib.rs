//! Criterion benchmarks for lahlab-core; see `benches/`.
