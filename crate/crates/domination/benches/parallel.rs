//! Parallel vs sequential throughput for the trial-based constructions
//! and the experiment harness.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domination::certificates::Variant;
use domination::construct::{random_construct, random_construct_sequential, SamplingPlan};
use domination::experiment::{run_experiment, ExperimentConfig, Task};
use domination::families::{generate, FamilySpec};

fn bench_trials(c: &mut Criterion) {
    let g = generate(&FamilySpec::Gnp { n: 200, p: 0.1 }, 7).unwrap();
    let plan = SamplingPlan {
        p: 0.25,
        seed: 11,
        trials: 256,
    };
    let mut group = c.benchmark_group("monte-carlo-trials");
    group.bench_with_input(BenchmarkId::new("parallel", plan.trials), &plan, |b, plan| {
        b.iter(|| random_construct(&g, Variant::Dominating, plan).unwrap())
    });
    group.bench_with_input(BenchmarkId::new("sequential", plan.trials), &plan, |b, plan| {
        b.iter(|| random_construct_sequential(&g, Variant::Dominating, plan).unwrap())
    });
    group.finish();
}

fn bench_experiment(c: &mut Criterion) {
    let base = ExperimentConfig {
        family: FamilySpec::Gnp { n: 12, p: 0.5 },
        samples: 16,
        tasks: vec![
            Task::Exact {
                variant: Variant::Dominating,
            },
            Task::Exact {
                variant: Variant::Roman,
            },
        ],
        master_seed: 5,
        workers: None,
        measure_time: false,
    };
    let mut group = c.benchmark_group("experiment-samples");
    let mut pooled = base.clone();
    group.bench_function("default-pool", |b| {
        b.iter(|| run_experiment(&base).unwrap())
    });
    pooled.workers = Some(1);
    group.bench_function("one-worker", |b| {
        b.iter(|| run_experiment(&pooled).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_trials, bench_experiment);
criterion_main!(benches);
