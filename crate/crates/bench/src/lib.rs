//! Benchmarks for the bks-core pipeline live in `benches/`.
