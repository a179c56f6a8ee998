//! Benchmark-only crate; see `benches/invariants.rs`.
