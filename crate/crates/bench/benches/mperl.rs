use std::collections::BTreeSet;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mperl_bench::{catalog_zetas, mixed_zetas};
use mperl_core::{
    cyclotomic, default_bound, expand, find_representation_avoiding, forced_alternatives,
    minimal_lefschetz_periods, torus_zeta_fixture,
};

fn polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclotomic");
    for d in [30u64, 210, 2310] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| cyclotomic(black_box(d)))
        });
    }
    group.finish();

    let torus = torus_zeta_fixture();
    let mut group = c.benchmark_group("expand");
    for order in [20usize, 60] {
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &order| {
            b.iter(|| expand(black_box(&torus), order))
        });
    }
    group.finish();
}

fn periods(c: &mut Criterion) {
    let catalog = catalog_zetas(6);
    c.bench_function("mper/catalog", |b| {
        b.iter(|| {
            for z in &catalog {
                black_box(minimal_lefschetz_periods(z, default_bound(z)).unwrap());
            }
        })
    });

    let mixed = mixed_zetas(50, 24);
    c.bench_function("mper/mixed", |b| {
        b.iter(|| {
            for z in &mixed {
                black_box(minimal_lefschetz_periods(z, default_bound(z)).unwrap());
            }
        })
    });

    c.bench_function("alternatives/mixed", |b| {
        b.iter(|| {
            for z in &mixed {
                black_box(forced_alternatives(z, default_bound(z)).unwrap());
            }
        })
    });

    let excluded: BTreeSet<u64> = [1, 3].into_iter().collect();
    c.bench_function("lattice/avoid", |b| {
        b.iter(|| {
            for z in &mixed {
                black_box(find_representation_avoiding(z, &excluded, default_bound(z)).unwrap());
            }
        })
    });
}

criterion_group!(benches, polynomials, periods);
criterion_main!(benches);
