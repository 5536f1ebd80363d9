use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use skewschur::identities::{gps_identity, verify_identity, Identity, Strategy};
use skewschur::par::Execution;
use skewschur::{Partition, StripSpec};

fn running_identity(mu: &[i64]) -> Identity {
    let lam = Partition::new([10i64, 7, 7, 6, 6, 4, 4, 3, 2, 2]).unwrap();
    let mu = Partition::new(mu.iter().copied()).unwrap();
    let strips = [StripSpec::new(2, 2, 3), StripSpec::new(1, 6, 2)];
    gps_identity(&lam, &mu, &strips).unwrap().identity.with_n(11)
}

fn multipoint(c: &mut Criterion) {
    let mut group = c.benchmark_group("multipoint");
    group.sample_size(10);
    for (name, mu) in [("mu=(4,3,3,1)", &[4i64, 3, 3, 1][..]), ("mu=()", &[][..])] {
        let id = running_identity(mu);
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), name), &id, |b, id| {
                b.iter(|| verify_identity(black_box(id), Strategy::Multipoint { count: 64, seed: 42 }, exec))
            });
        }
    }
    group.finish();
}

fn full_expansion(c: &mut Criterion) {
    let lam = Partition::new([4i64, 3, 2, 2]).unwrap();
    let mu = Partition::new([1i64]).unwrap();
    let id = gps_identity(&lam, &mu, &[StripSpec::new(1, 2, 1), StripSpec::new(1, 3, 2)])
        .unwrap()
        .identity
        .with_n(5);
    let mut group = c.benchmark_group("full");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), "n=5"), &id, |b, id| {
            b.iter(|| verify_identity(black_box(id), Strategy::Full, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, multipoint, full_expansion);
criterion_main!(benches);
