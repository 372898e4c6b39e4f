use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tangle_surgery::{IntRange, Suite, SweepBox, Verifier};

fn small_box() -> SweepBox {
    let r = IntRange::new(-4, 4).unwrap();
    SweepBox::new(r, r, r, r)
}

fn suites(c: &mut Criterion) {
    let sweep = small_box();
    let verifier = Verifier::new().jobs(1);
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for suite in Suite::EACH {
        group.bench_function(suite.name(), |b| {
            b.iter(|| verifier.run(black_box(suite), &sweep).unwrap())
        });
    }
    group.finish();
}

fn jobs(c: &mut Criterion) {
    let sweep = small_box();
    let mut group = c.benchmark_group("h1-slope-jobs");
    group.sample_size(10);
    for jobs in [1, 2, 4, 8] {
        let verifier = Verifier::new().jobs(jobs);
        group.bench_function(jobs.to_string(), |b| {
            b.iter(|| verifier.run(Suite::H1Slope, black_box(&sweep)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, suites, jobs);
criterion_main!(benches);
