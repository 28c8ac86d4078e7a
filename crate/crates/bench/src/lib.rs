//! Criterion benchmarks for `hecke-core`; see `benches/`.
