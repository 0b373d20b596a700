//! Criterion benchmarks for `rookposet`; see `benches/posets.rs`.
