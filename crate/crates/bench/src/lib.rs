//! Criterion benchmarks for z3calc; see `benches/`.
