use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use weylstab::census::{admissible_report, max_regular_reductive};
use weylstab::realforms::enumerate_real_forms;
use weylstab::roots::{weyl_dim, CartanType, RootSystem, Weight};

fn roots(c: &mut Criterion) {
    c.bench_function("root-system-e8", |b| {
        b.iter(|| RootSystem::new(black_box(CartanType::e(8))))
    });
    let e8 = RootSystem::new(CartanType::e(8));
    let w = Weight(vec![1, 0, 1, 0, 0, 1, 0, 2]);
    c.bench_function("weyl-dim-e8", |b| b.iter(|| weyl_dim(&e8, black_box(&w))));
    let d8 = RootSystem::new(CartanType::d(8));
    c.bench_function("regular-d8", |b| {
        b.iter(|| max_regular_reductive(black_box(&d8)))
    });
}

fn audits(c: &mut Criterion) {
    c.bench_function("admissible-10", |b| {
        b.iter(|| admissible_report(black_box(10)))
    });
    let mut g = c.benchmark_group("realforms");
    g.sample_size(10);
    g.bench_function("rank-4", |b| b.iter(|| enumerate_real_forms(black_box(4))));
    g.finish();
}

criterion_group!(benches, roots, audits);
criterion_main!(benches);
