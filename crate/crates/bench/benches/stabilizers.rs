use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weylstab::lie::{construct_real, MetricForm, RealLieAlgebra, SubalgebraSpec};
use weylstab::weyl::{
    co_stabilizer, fixed_space, invariant_lines, make_tensor, TensorKind, WeylSpace,
};

fn weyl_space(c: &mut Criterion) {
    let mut g = c.benchmark_group("weyl-space");
    g.sample_size(10);
    for n in [6, 8, 10] {
        let form = MetricForm::lightcone(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &form, |b, f| {
            b.iter(|| WeylSpace::new(black_box(f)))
        });
    }
    g.finish();
}

fn co_lor(c: &mut Criterion) {
    let mut g = c.benchmark_group("co-lor");
    g.sample_size(10);
    for n in [6, 8, 10] {
        let so = RealLieAlgebra::so(&MetricForm::lightcone(n).unwrap());
        let phi = make_tensor(TensorKind::Lor, n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| co_stabilizer(black_box(&phi), &so))
        });
    }
    g.finish();
}

fn fixed_and_lines(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariants");
    g.sample_size(10);
    let w = WeylSpace::new(&MetricForm::lightcone(8).unwrap()).unwrap();
    let r1 = construct_real(SubalgebraSpec::R1 { n: 8 }).unwrap();
    let s = construct_real(SubalgebraSpec::S { n: 8 }).unwrap();
    g.bench_function("fixed-r1-8", |b| b.iter(|| fixed_space(black_box(&r1), &w)));
    g.bench_function("lines-s-8", |b| {
        b.iter(|| invariant_lines(black_box(&s), &w))
    });
    g.finish();
}

criterion_group!(benches, weyl_space, co_lor, fixed_and_lines);
criterion_main!(benches);
