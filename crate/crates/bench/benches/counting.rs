use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use vfcomb::asymptotics::{normality_distance, stats};
use vfcomb::counting::{
    c_total_closed, coeffs_algebraic, dimension_distribution_closed, split_sequences,
};
use vfcomb::enumerate::{brute_count, enumerate};
use vfcomb::moduli::burnside_count;

fn counting(c: &mut Criterion) {
    c.bench_function("closed form c_200", |b| {
        b.iter(|| c_total_closed(black_box(200)))
    });
    c.bench_function("split recursions to n=200", |b| {
        b.iter(|| split_sequences(black_box(200)))
    });
    c.bench_function("cubic coefficients to d=60", |b| {
        b.iter(|| coeffs_algebraic(black_box(60)))
    });
    c.bench_function("dimension distribution d=100", |b| {
        b.iter(|| dimension_distribution_closed(black_box(100)))
    });
}

fn generation(c: &mut Criterion) {
    c.bench_function("enumerate d=6", |b| {
        b.iter(|| enumerate(black_box(6)).unwrap().count())
    });
    c.bench_function("brute force n=10", |b| {
        b.iter(|| brute_count(black_box(10)))
    });
    c.bench_function("burnside d=5", |b| b.iter(|| burnside_count(black_box(5))));
}

fn asymptotics(c: &mut Criterion) {
    c.bench_function("stats d=100", |b| b.iter(|| stats(black_box(100))));
    c.bench_function("normality distance d=100", |b| {
        b.iter(|| normality_distance(black_box(100)))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = counting, generation, asymptotics
}
criterion_main!(benches);
