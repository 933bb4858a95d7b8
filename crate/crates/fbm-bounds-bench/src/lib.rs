//! Benchmark-only crate; see the `benches/` directory. The analytic entry
//! points are benchmarked in `bounds`, path generation and the Monte-Carlo
//! estimators in `sampler`.
