//! Criterion benchmarks for the classification routines; see `benches/`.
