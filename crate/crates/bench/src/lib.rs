//! Criterion benchmarks for the exact kernels live in `benches/kernels.rs`;
//! run them with `cargo bench -p torusaf-bench`.
