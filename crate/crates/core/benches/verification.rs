use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sl2loop::par::Execution;
use sl2loop::subalgebra_lab::onsager::onsager_pairs;
use sl2loop::subalgebra_lab::{subalgebra_closure, DegreeCap};
use sl2loop::suites::identities::{cocycle_report, jacobi_report, CocycleOptions};
use sl2loop::tetrahedron::a4::verify_a4_presentation;
use sl2loop::tetrahedron::sigma_hat;
use sl2loop::tetrahedron::verify::extended_report;

fn modes() -> Vec<Execution> {
    let mut out = vec![Execution::Sequential];
    if Execution::default() != Execution::Sequential {
        out.push(Execution::default());
    }
    out
}

fn relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("relations");
    for exec in modes() {
        group.bench_with_input(BenchmarkId::new("extended", exec.name()), &exec, |b, &e| {
            b.iter(|| extended_report(e))
        });
        group.bench_with_input(
            BenchmarkId::new("a4-indexed", exec.name()),
            &exec,
            |b, &e| b.iter(|| verify_a4_presentation(e).unwrap()),
        );
    }
    group.finish();
}

fn sampled(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampled");
    group.sample_size(10);
    let opts = CocycleOptions {
        max_degree: 6,
        random_degree: 5,
        samples: 100,
        seed: 42,
    };
    for exec in modes() {
        group.bench_with_input(BenchmarkId::new("cocycle", exec.name()), &exec, |b, &e| {
            b.iter(|| cocycle_report(opts, e))
        });
        group.bench_with_input(BenchmarkId::new("jacobi", exec.name()), &exec, |b, &e| {
            b.iter(|| jacobi_report(50, 4, 42, e))
        });
    }
    group.finish();
}

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    group.sample_size(10);
    let (g, h) = onsager_pairs()[0];
    let gens = [sigma_hat(g), sigma_hat(h)];
    for exec in modes() {
        group.bench_with_input(
            BenchmarkId::new("onsager-cap3", exec.name()),
            &exec,
            |b, &e| b.iter(|| subalgebra_closure(&gens, DegreeCap::new(3), e).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, relations, sampled, closure);
criterion_main!(benches);
