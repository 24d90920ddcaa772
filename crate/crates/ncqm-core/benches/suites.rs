//! Sequential vs parallel timing of the verification suites. Both paths
//! produce byte-identical reports, so this measures pure scheduling cost.

use criterion::{criterion_group, criterion_main, Criterion};
use ncqm_core::verify::{run_all, run_group_suite, run_reps_suite, RunConfig, Sweeps};
use ncqm_core::Execution;

fn bench_config() -> RunConfig {
    RunConfig {
        sweeps: Sweeps {
            group_triples: 4000,
            coadjoint_pairs: 4000,
            orbit_trajectories: 60,
            homomorphism_samples: 60,
            gauge_members: 4,
            weyl_pairs: 24,
            torus_packets: 3,
        },
        ..RunConfig::default()
    }
}

fn label(exec: Execution) -> &'static str {
    match exec {
        Execution::Sequential => "sequential",
        Execution::Parallel => "parallel",
    }
}

fn suites(c: &mut Criterion) {
    let config = bench_config();

    let mut group = c.benchmark_group("group-suite");
    group.sample_size(20);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(label(exec), |b| b.iter(|| run_group_suite(&config, exec)));
    }
    group.finish();

    let mut reps = c.benchmark_group("reps-suite");
    reps.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        reps.bench_function(label(exec), |b| b.iter(|| run_reps_suite(&config, exec)));
    }
    reps.finish();

    let mut all = c.benchmark_group("all-suites");
    all.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        all.bench_function(label(exec), |b| b.iter(|| run_all(&config, exec).unwrap()));
    }
    all.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
