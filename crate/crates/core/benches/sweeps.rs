use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dpt_core::heights::{bcz_experiment, probe_main_inequality, s_unit_points, ProbeConfig};
use dpt_core::par::Exec;
use dpt_core::regress::regress;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn probe(c: &mut Criterion) {
    let pts = s_unit_points(&[2, 3, 5], 10, 2000, 1).unwrap();
    let cfg = ProbeConfig::coordinate_lines(1e-6, None);
    let mut g = c.benchmark_group("probe");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| probe_main_inequality(&cfg, &pts, e).unwrap())
        });
    }
    g.finish();
}

fn bcz(c: &mut Criterion) {
    let mut g = c.benchmark_group("bcz");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| bcz_experiment(2, 3, 400, e).unwrap())
        });
    }
    g.finish();
}

fn regression_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("regress");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| regress(false, e))
        });
    }
    g.finish();
}

criterion_group!(benches, probe, bcz, regression_table);
criterion_main!(benches);
