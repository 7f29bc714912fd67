//! Sequential vs parallel verification sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use genomic_tableaux::shapes::Partition;
use genomic_tableaux::sweep::{sweep_grassmannian, sweep_shifted, SweepConfig};

fn threads() -> usize {
    std::thread::available_parallelism().map_or(4, |n| n.get()).max(2)
}

fn grassmannian(c: &mut Criterion) {
    let mut group = c.benchmark_group("grassmannian_sweep_333_size7");
    group.sample_size(10);
    for jobs in [1, threads()] {
        let mut cfg = SweepConfig::new("3,3,3".parse::<Partition>().unwrap(), 7);
        cfg.gr = Some((3, 6));
        cfg.jobs = jobs;
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &cfg, |b, cfg| {
            b.iter(|| sweep_grassmannian(cfg).unwrap())
        });
    }
    group.finish();
}

fn shifted(c: &mut Criterion) {
    let mut group = c.benchmark_group("shifted_sweep_delta4");
    group.sample_size(10);
    for jobs in [1, threads()] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| sweep_shifted(4, jobs).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, grassmannian, shifted);
criterion_main!(benches);
