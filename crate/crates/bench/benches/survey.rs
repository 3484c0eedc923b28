use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ssq_core::enumerate::{classify_all, enumerate_diagrams};

fn bench_survey(c: &mut Criterion) {
    c.bench_function("enumerate_diagrams n=8", |b| {
        b.iter(|| enumerate_diagrams(black_box(8)).unwrap())
    });
    c.bench_function("classify_all n=8", |b| {
        b.iter(|| classify_all(black_box(8)).unwrap())
    });
}

criterion_group!(benches, bench_survey);
criterion_main!(benches);
