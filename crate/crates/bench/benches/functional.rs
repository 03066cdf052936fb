use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use circint_core::coeff::{int, rational};
use circint_core::random::{random_polynomial, seeded};
use circint_core::{
    canonicalize, cross_check, psi, psi_general, super_catalan, CircleSpec, Rotation,
};

fn bench_psi(c: &mut Criterion) {
    let mut rng = seeded(1);
    let polys: Vec<_> = (0..64).map(|_| random_polynomial(&mut rng, 12)).collect();
    c.bench_function("psi/random_deg12", |b| {
        b.iter(|| {
            polys.iter().for_each(|p| {
                black_box(psi(black_box(p)));
            })
        })
    });
    let circle = CircleSpec::new(int(2), rational(1, 3), rational(-5, 7)).unwrap();
    c.bench_function("psi_general/random_deg12", |b| {
        b.iter(|| {
            polys.iter().for_each(|p| {
                black_box(psi_general(&circle, black_box(p)));
            })
        })
    });
    c.bench_function("canonicalize/random_deg12", |b| {
        b.iter(|| {
            polys.iter().for_each(|p| {
                black_box(canonicalize(black_box(p)));
            })
        })
    });
    let h = Rotation::param(int(7)).unwrap();
    c.bench_function("act/random_deg12", |b| {
        b.iter(|| {
            polys.iter().for_each(|p| {
                black_box(black_box(p).act(&h));
            })
        })
    });
}

fn bench_super_catalan(c: &mut Criterion) {
    let mut group = c.benchmark_group("super_catalan");
    for n in [10u32, 50, 200] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| super_catalan(black_box(n), black_box(n)))
        });
    }
    group.finish();
}

fn bench_cross_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_check");
    for p in [23u64, 101] {
        group.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| {
            b.iter(|| cross_check(p))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_psi, bench_super_catalan, bench_cross_check);
criterion_main!(benches);
