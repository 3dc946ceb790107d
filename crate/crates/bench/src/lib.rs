//! Criterion benchmarks for `negconc-core`; see `benches/measures.rs`.
