use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use mulrank::evalinterp;
use mulrank::AlgebraSpec;

fn construct_and_verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("genus0");
    for (q, k) in [(16u64, 9usize), (25, 13), (49, 11)] {
        g.bench_with_input(BenchmarkId::new("construct", format!("q{q}_k{k}")), &(q, k), |b, &(q, k)| {
            b.iter(|| evalinterp::construct_genus0_field(black_box(q), k).unwrap())
        });
        let alg = evalinterp::construct_genus0_field(q, k).unwrap();
        g.bench_with_input(BenchmarkId::new("verify", format!("q{q}_k{k}")), &alg, |b, alg| {
            b.iter(|| evalinterp::verify_symmetric_algorithm(black_box(alg)).unwrap())
        });
    }
    g.finish();
}

fn rank_search(c: &mut Criterion) {
    let spec = AlgebraSpec::field(2, 3).unwrap();
    c.bench_function("rank/F8_over_F2", |b| {
        b.iter(|| evalinterp::bruteforce_symmetric_rank(black_box(&spec), 6).unwrap())
    });
}

criterion_group!(benches, construct_and_verify, rank_search);
criterion_main!(benches);
