//! Benchmarks for `keralapi`; run with `cargo bench -p keralapi-bench`.
