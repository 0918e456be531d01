//! Benchmarks for the hot paths: Kronecker-product pipelines on three
//! tensor legs, deterministic idempotent splitting, and the axiom suites.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ydcheck_bench::matrix_units_algebra;
use ydcheck_core::adjoint::{adjoint_braiding_suite, build_adjoint};
use ydcheck_core::split_idempotent;
use ydcheck_core::wbha::check_wbb;
use ydcheck_core::weak_op::{derived_wo_suite, WeakOperatorQuad};
use ydcheck_core::yd::{base_object, yd_product};

fn bench_kronecker_compose(c: &mut Criterion) {
    let mut group = c.benchmark_group("kronecker_compose");
    for n in [2usize, 3, 4] {
        let d = matrix_units_algebra(n);
        let id = d.id();
        // t ∘ (μ ⊗ D): the shape of a typical axiom side on D⊗D⊗D.
        group.bench_with_input(BenchmarkId::from_parameter(n * n), &d, |b, d| {
            b.iter(|| {
                let lifted = d.mult().tensor(&id);
                d.t().compose(&lifted).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_split(c: &mut Criterion) {
    let mut group = c.benchmark_group("split_idempotent");
    for n in [2usize, 3, 4] {
        let d = matrix_units_algebra(n);
        group.bench_with_input(BenchmarkId::from_parameter(n * n), &d, |b, d| {
            b.iter(|| split_idempotent(&d.pi_l, "D_L").unwrap())
        });
    }
    group.finish();
}

fn bench_wbb_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_wbb");
    group.sample_size(20);
    for n in [2usize, 3] {
        let d = matrix_units_algebra(n);
        group.bench_with_input(BenchmarkId::from_parameter(n * n), &d, |b, d| {
            b.iter(|| {
                let rep = check_wbb(d);
                assert!(rep.passed());
                rep
            })
        });
    }
    group.finish();
}

fn bench_wo_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("derived_wo_suite");
    group.sample_size(10);
    let d = matrix_units_algebra(2);
    let w = WeakOperatorQuad::from_wyb(d).unwrap();
    group.bench_function("matrix_units_2", |b| {
        b.iter(|| {
            let rep = derived_wo_suite(&w);
            assert!(rep.passed());
            rep
        })
    });
    group.finish();
}

fn bench_yd_product(c: &mut Criterion) {
    let mut group = c.benchmark_group("yd_product");
    group.sample_size(10);
    for n in [2usize, 3] {
        let d = matrix_units_algebra(n);
        let dl = base_object(&d).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &dl, |b, dl| {
            b.iter(|| yd_product(dl, dl).unwrap())
        });
    }
    group.finish();
}

fn bench_adjoint_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("adjoint_braiding_suite");
    group.sample_size(10);
    let d = matrix_units_algebra(2);
    let adj = build_adjoint(&d).unwrap();
    group.bench_function("matrix_units_2", |b| {
        b.iter(|| {
            let rep = adjoint_braiding_suite(&adj);
            assert!(rep.passed());
            rep
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_kronecker_compose,
    bench_split,
    bench_wbb_suite,
    bench_wo_suite,
    bench_yd_product,
    bench_adjoint_suite
);
criterion_main!(benches);
