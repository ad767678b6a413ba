use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mixedpoly::projective::{scan_point_counts_with, verify_degree_with};
use mixedpoly::winding::{winding_of, Contour, MAX_SAMPLES};
use mixedpoly::*;
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn opts(exec: Exec) -> SolverOptions {
    SolverOptions {
        exec,
        ..SolverOptions::default()
    }
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_point_counts");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "q=1,r=1,trials=64"), &exec, |b, &exec| {
            b.iter(|| scan_point_counts_with(1, 1, black_box(64), 0, &opts(exec)).unwrap())
        });
    }
    group.finish();
}

fn bench_verify_degree(c: &mut Criterion) {
    let f = build_family(&FamilySpec::new(FamilyKind::S2).with_int("q", 3).with_int("r", 1)).unwrap();
    let mut group = c.benchmark_group("verify_degree");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "s2(3,1),trials=16"), &exec, |b, &exec| {
            b.iter(|| verify_degree_with(black_box(&f), 16, 0, &opts(exec)).unwrap())
        });
    }
    group.finish();
}

fn bench_solve(c: &mut Criterion) {
    // A degree-9 mixed polynomial: many clusters survive the first levels.
    let g = parse("z1^6*conj(z1)^3 - (0.3+0.4i)*z1^4*conj(z1)^2 + 2*z1^3 - conj(z1)^2 + 0.25").unwrap();
    let mut group = c.benchmark_group("solve");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "degree 9"), &exec, |b, &exec| {
            b.iter(|| solve(black_box(&g), &opts(exec)).unwrap())
        });
    }
    group.finish();
}

fn bench_winding(c: &mut Criterion) {
    // w^300 needs 2048 samples; w^3000 needs 16384.
    let mut group = c.benchmark_group("contour_winding");
    for degree in [300u32, 3000] {
        let g = MixedUnivariate::new(&MixedPolynomial::univariate([(degree, 0, Complex64::new(1.0, 0.0))])).unwrap();
        let contour = Contour::new(Complex64::new(0.0, 0.0), 1.0).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, degree), &exec, |b, &exec| {
                b.iter(|| winding_of(black_box(&g), contour, MAX_SAMPLES, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_scan, bench_verify_degree, bench_solve, bench_winding);
criterion_main!(benches);
