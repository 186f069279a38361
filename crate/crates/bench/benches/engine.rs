use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gpf_bench::{generic, golden};
use gpf_core::arguments::{localize_roots, x_of_s};
use gpf_core::certify::{nsc_certify, search};
use gpf_core::contiguous::A_of_lambda;
use gpf_core::kernels::{p_poly, phi};
use gpf_core::numeric::verify::{verify_certificate, DEFAULT_SEED};

fn contiguous(c: &mut Criterion) {
    let mut g = c.benchmark_group("contiguous");
    for (p, r) in [(1, 3), (2, 6), (3, 9)] {
        let lam = generic(p, r);
        g.bench_with_input(BenchmarkId::new("A_of_lambda", format!("{p}-{r}")), &lam, |b, l| b.iter(|| A_of_lambda(black_box(l)).unwrap()));
        g.bench_with_input(BenchmarkId::new("phi_and_p", format!("{p}-{r}")), &lam, |b, l| {
            b.iter(|| (phi(black_box(l)).unwrap(), p_poly(black_box(l)).unwrap()))
        });
    }
    g.finish();
}

fn criterion_and_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify");
    g.bench_function("x_of_s 12", |b| b.iter(|| x_of_s(black_box(12)).unwrap()));
    g.bench_function("nsc 2-4-1", |b| b.iter(|| nsc_certify(2, 4, 1, 1).unwrap()));
    g.sample_size(10);
    g.bench_function("search 3x2", |b| b.iter(|| search(3, 2, 128).unwrap()));
    g.finish();
}

fn numeric(c: &mut Criterion) {
    let certs = golden();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("certificate 1-3 at 128 bits", |b| b.iter(|| verify_certificate(&certs[0], 128, DEFAULT_SEED).unwrap()));
    g.finish();
}

fn roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("roots");
    g.sample_size(10);
    for s in [6, 12, 25] {
        g.bench_with_input(BenchmarkId::new("localize", s), &s, |b, &s| b.iter(|| localize_roots(s, 128).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, contiguous, criterion_and_search, numeric, roots);
criterion_main!(benches);
