use criterion::{criterion_group, criterion_main, Criterion};
use ladderlink::families::initial_generators;
use ladderlink::linkage::{build_chain, groebner_fixed_point, verify_family};
use ladderlink::monomial_ideal::MonomialIdeal;
use ladderlink::{Budget, Field, SimplicialComplex};
use ladderlink_bench::instances;

const Q: Field = Field::Rationals;

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner_fixed_point");
    for (name, l) in instances() {
        let o = l.default_order();
        g.bench_function(name, |b| b.iter(|| groebner_fixed_point(&l, &o, Q, &Budget::unlimited()).unwrap()));
    }
    g.finish();
}

fn chain(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_chain");
    for (name, l) in instances() {
        let o = l.default_order();
        g.bench_function(name, |b| b.iter(|| build_chain(&l, &o, Q, &Budget::unlimited()).unwrap()));
    }
    g.finish();
}

fn vertex_decomposition(c: &mut Criterion) {
    let mut g = c.benchmark_group("vertex_decomposition");
    for (name, l) in instances() {
        let a = MonomialIdeal::new(initial_generators(&l, &l.default_order(), Q).unwrap(), l.variables());
        let cx = SimplicialComplex::from_squarefree(&a).unwrap();
        g.bench_function(name, |b| b.iter(|| cx.is_vertex_decomposable_with(&[], &Budget::unlimited()).unwrap()));
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_family");
    g.sample_size(10);
    for (name, l) in instances() {
        let o = l.default_order();
        g.bench_function(name, |b| b.iter(|| verify_family(&l, &o, Q, None, &Budget::unlimited()).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, groebner, chain, vertex_decomposition, verify);
criterion_main!(benches);
