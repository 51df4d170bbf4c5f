//! Criterion benchmarks for `bpsplit-core`; see `benches/`.
