//! Benchmarks for the KL table, the h-tensor, T-basis products, cells and
//! sampled verification live in `benches/kernels.rs`.
