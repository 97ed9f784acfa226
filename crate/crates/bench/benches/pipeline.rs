use std::hint::black_box;

use bellpart::bell::{complete_bell, ArgumentSequence};
use bellpart::identity::{theorem_lhs_sequence, verify_theorem};
use bellpart::partitions::PartitionTable;
use bellpart::qseries::{euler_product, extract_log_coefficients, series_g, series_h, LogTarget};
use bellpart::ExactRational;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_table");
    for n in [1_000usize, 11_006] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| PartitionTable::new().get(black_box(n)).clone())
        });
    }
    group.finish();
}

fn bell(c: &mut Criterion) {
    let ones: ArgumentSequence = (0..64)
        .map(|_| ExactRational::from_integer(1.into()))
        .collect();
    c.bench_function("complete_bell_64_ones", |b| {
        b.iter(|| complete_bell(black_box(64), &ones).unwrap())
    });
    c.bench_function("theorem_lhs_sequence_64", |b| {
        b.iter(|| theorem_lhs_sequence(black_box(64)))
    });
}

fn series(c: &mut Criterion) {
    c.bench_function("euler_inverse_200", |b| {
        b.iter(|| euler_product(black_box(200)).inverse().unwrap())
    });
    c.bench_function("g_plus_h_200", |b| {
        b.iter(|| &series_g(black_box(200)) + &series_h(black_box(200)))
    });
    c.bench_function("log_coefficients_g_100", |b| {
        b.iter(|| extract_log_coefficients(LogTarget::G, black_box(100)).unwrap())
    });
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("theorem_64", |b| {
        b.iter(|| verify_theorem(black_box(64)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, partitions, bell, series, verification);
criterion_main!(benches);
