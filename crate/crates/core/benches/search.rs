use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbow_core::claims::sweep_two_jump;
use rainbow_core::fsearch::sweep_b_properties;
use rainbow_core::{f_value, Degree2Graph, SearchConfig};

fn config(workers: usize) -> SearchConfig {
    SearchConfig {
        workers,
        time_budget: None,
        ..SearchConfig::default()
    }
}

const MODES: [(&str, usize); 2] = [("sequential", 1), ("parallel", 0)];

fn f_values(c: &mut Criterion) {
    let mut group = c.benchmark_group("f_value");
    group.sample_size(10);
    for (name, n, m) in [("P10", 4, 4), ("C11", 4, 4), ("C4+C4+C4", 4, 4)] {
        let g: Degree2Graph = name.parse().unwrap();
        for (mode, workers) in MODES {
            let cfg = config(workers);
            group.bench_with_input(BenchmarkId::new(mode, name), &g, |b, g| {
                b.iter(|| f_value(g, n, m, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (mode, workers) in MODES {
        let cfg = config(workers);
        group.bench_function(BenchmarkId::new(mode, "two_jump C11 n4"), |b| {
            b.iter(|| sweep_two_jump(11, 4, &cfg).unwrap())
        });
        group.bench_function(BenchmarkId::new(mode, "b_properties C9 n3"), |b| {
            b.iter(|| sweep_b_properties(9, 3, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, f_values, sweeps);
criterion_main!(benches);
