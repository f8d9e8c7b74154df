//! Criterion benchmarks for `mulrank`; see `benches/`.
