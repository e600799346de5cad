use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use triop_core::cybe::verify_cybe_catalogue;
use triop_core::ooperator::{catalogue, grid_completeness_search, verify_catalogue};
use triop_core::par::Jobs;
use triop_core::suites::lemma_suite;
use triop_core::trisys::TriAlgebra;

const MODES: [(&str, Jobs); 2] = [("sequential", Jobs::Sequential), ("parallel", Jobs::Parallel)];

fn grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("search_grid_bound_1");
    g.sample_size(10);
    for (name, jobs) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &jobs, |b, &jobs| {
            b.iter(|| black_box(grid_completeness_search(1, jobs)))
        });
    }
    g.finish();
}

fn catalogue_checks(c: &mut Criterion) {
    let a = TriAlgebra::a3();
    let families = catalogue();
    let mut g = c.benchmark_group("catalogue");
    g.sample_size(10);
    for (name, jobs) in MODES {
        g.bench_with_input(BenchmarkId::new("operators", name), &jobs, |b, &jobs| {
            b.iter(|| black_box(verify_catalogue(&a, &families, jobs).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("cybe", name), &jobs, |b, &jobs| {
            b.iter(|| black_box(verify_cybe_catalogue(&families, jobs).unwrap()))
        });
    }
    g.finish();
}

fn sampled(c: &mut Criterion) {
    let mut g = c.benchmark_group("lemma_suite_60");
    g.sample_size(10);
    for (name, jobs) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &jobs, |b, &jobs| {
            b.iter(|| black_box(lemma_suite(1, 60, jobs)))
        });
    }
    g.finish();
}

criterion_group!(benches, grid, catalogue_checks, sampled);
criterion_main!(benches);
