//! Grid-verification benchmarks. Benchmark names are identical whether the
//! `parallel` feature is on or off, so criterion's saved baselines compare
//! the rayon path against the sequential fallback directly:
//!
//!     cargo bench -p picert-core
//!     cargo bench -p picert-core --no-default-features

use criterion::{criterion_group, criterion_main, Criterion};
use picert_core::interval::Interval;
use picert_core::squeeze::{verify_angle_bounds, verify_chain_grid};
use std::hint::black_box;

fn bench_angle_bounds(c: &mut Criterion) {
    let domain = Interval::new(1e-6, 1.5).unwrap();
    let mut group = c.benchmark_group("angle_bounds_grid");
    for cells in [1_000u64, 10_000] {
        group.bench_function(format!("cells_{cells}"), |b| {
            b.iter(|| verify_angle_bounds(black_box(domain), black_box(cells), 12).unwrap())
        });
    }
    group.finish();
}

fn bench_chain_grid(c: &mut Criterion) {
    let domain = Interval::new(1e-3, 1.5).unwrap();
    let mut group = c.benchmark_group("chain_grid");
    for points in [1_000u64, 10_000] {
        group.bench_function(format!("points_{points}"), |b| {
            b.iter(|| verify_chain_grid(black_box(domain), black_box(points)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_angle_bounds, bench_chain_grid);
criterion_main!(benches);
