use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tamagawa::exec::Exec;
use tamagawa::survey::{intro_count, tilde_stats};

fn strategies() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn height_survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("tilde_stats");
    group.sample_size(10);
    for (ell, x) in [(5u32, 5.0), (7, 11.0)] {
        for (name, exec) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, format!("l={ell},X={x}")), &exec, |b, &exec| {
                b.iter(|| tilde_stats(ell, x, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn one_parameter_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("intro_count");
    group.sample_size(10);
    for (name, exec) in strategies() {
        group.bench_with_input(BenchmarkId::new(name, 1000), &exec, |b, &exec| {
            b.iter(|| intro_count(1000, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, height_survey, one_parameter_count);
criterion_main!(benches);
