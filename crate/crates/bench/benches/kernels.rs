use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use stature_bench::{maximal, w};
use stature_core::artin::{beta, pi1_generators, q_contractible, DEFAULT_COSET_LIMIT};
use stature_core::closure::{closure, Limits};
use stature_core::{canonical_form, fiber_product, fold};

fn folding(c: &mut Criterion) {
    let mut group = c.benchmark_group("fold");
    for n in [4u32, 8, 12] {
        let gens = pi1_generators(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &gens, |b, g| b.iter(|| fold(black_box(g))));
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("fiber_product");
    for n in [4u32, 8, 12] {
        let g = w(n);
        group.bench_with_input(BenchmarkId::new("W x W", n), &g, |b, g| b.iter(|| fiber_product(black_box(g), black_box(g))));
    }
    let m = maximal(4);
    let y = m.iter().max_by_key(|g| g.vertex_count()).unwrap().clone();
    group.bench_function("largest n=4 element squared", |b| b.iter(|| fiber_product(black_box(&y), black_box(&y))));
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let m = maximal(4);
    c.bench_function("canonical_form n=4 maximal", |b| {
        b.iter(|| m.iter().map(|g| canonical_form(black_box(g), true).unwrap()).collect::<Vec<_>>())
    });
}

fn involution(c: &mut Criterion) {
    let m = maximal(4);
    c.bench_function("beta n=4 maximal", |b| b.iter(|| m.iter().map(|g| beta(black_box(g), 4).unwrap()).collect::<Vec<_>>()));
}

fn contractibility(c: &mut Criterion) {
    let g = w(8);
    c.bench_function("q_contractible W(8)", |b| b.iter(|| q_contractible(black_box(&g), 8, DEFAULT_COSET_LIMIT)));
}

fn closure_runs(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    group.sample_size(10);
    for n in [4u32, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| closure(n, Limits::default())));
    }
    group.finish();
}

criterion_group!(benches, folding, products, canonical, involution, contractibility, closure_runs);
criterion_main!(benches);
