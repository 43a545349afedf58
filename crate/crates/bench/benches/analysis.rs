use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use kharibound::oracle::{default_omega_grid, oracle_global_inf, SamplingPlan};
use kharibound::spr::{band_infimum, pointwise_extremum, spr_index};
use kharibound::{BandSpec, Quantity, Tolerances};
use kharibound_bench::{binomial_family, reference_family};

fn pointwise(c: &mut Criterion) {
    let itf = reference_family();
    let tol = Tolerances::default();
    c.bench_function("pointwise_min_re", |b| {
        b.iter(|| pointwise_extremum(black_box(&itf), black_box(1.0), Quantity::MinRe, &tol))
    });
}

fn band_and_index(c: &mut Criterion) {
    let tol = Tolerances::default();
    let band = BandSpec::new(0.1, 10.0).unwrap();
    for n in [3usize, 6, 9] {
        let itf = binomial_family(n);
        c.bench_function(&format!("band_infimum_n{n}"), |b| b.iter(|| band_infimum(black_box(&itf), &band, &tol)));
        c.bench_function(&format!("spr_index_n{n}"), |b| b.iter(|| spr_index(black_box(&itf), &tol)));
    }
}

fn oracle(c: &mut Criterion) {
    let itf = binomial_family(3);
    let tol = Tolerances::default();
    let grid = default_omega_grid(&itf, &tol);
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("corners_global_n3", |b| {
        b.iter(|| oracle_global_inf(black_box(&itf), &grid, &SamplingPlan::corners_only(), &tol))
    });
    group.finish();
}

criterion_group!(benches, pointwise, band_and_index, oracle);
criterion_main!(benches);
