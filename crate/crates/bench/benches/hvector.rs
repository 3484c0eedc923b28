use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ssq_core::hilbert::{antichain_counts, direct_hf_capped, hvector_dp};
use ssq_core::v2k;

fn bench_hvector(c: &mut Criterion) {
    let d = v2k(12).unwrap();
    c.bench_function("hvector_dp v2k(12)", |b| {
        b.iter(|| hvector_dp(black_box(&d)))
    });
    c.bench_function("antichain_counts v2k(12)", |b| {
        b.iter(|| antichain_counts(black_box(&d)))
    });
    let small = v2k(4).unwrap();
    c.bench_function("direct_hf v2k(4) degree 3", |b| {
        b.iter(|| direct_hf_capped(black_box(&small), 3, 10_000_000).unwrap())
    });
}

criterion_group!(benches, bench_hvector);
criterion_main!(benches);
