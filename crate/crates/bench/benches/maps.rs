use alladi_bench::{alladi_inputs, schur_inputs};
use alladi_core::factorization::refined_factorization;
use alladi_core::maps::{f, f_inverse};
use alladi_core::poly::d_n;
use alladi_core::Orientation;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_f(c: &mut Criterion) {
    let schur = schur_inputs(40);
    let alladi = alladi_inputs(30);
    c.bench_function("f over Schur partitions with sum <= 40", |b| {
        b.iter(|| {
            schur
                .iter()
                .map(|p| f(black_box(p)).unwrap().len())
                .sum::<usize>()
        })
    });
    c.bench_function("f_inverse over Alladi partitions with sum <= 30", |b| {
        b.iter(|| {
            alladi
                .iter()
                .map(|a| f_inverse(black_box(a)).unwrap().len())
                .sum::<usize>()
        })
    });
}

fn bench_factorization(c: &mut Criterion) {
    let schur = schur_inputs(50);
    c.bench_function("refined upper factorization, sum <= 50", |b| {
        b.iter(|| {
            schur
                .iter()
                .map(|p| {
                    refined_factorization(black_box(p), Orientation::Upper)
                        .unwrap()
                        .factors
                        .len()
                })
                .sum::<usize>()
        })
    });
}

fn bench_polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_N by enumeration");
    for n in [12i64, 18, 24] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| d_n(black_box(n)).len())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_f, bench_factorization, bench_polynomials);
criterion_main!(benches);
