//! Compares the rayon sweep (`check_identity`, default `parallel` feature)
//! against the single threaded sweep on identities that hold, so both sides
//! visit every tuple. With `--no-default-features` the two paths coincide.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion, Throughput};

use superalg::catalog::{self, FamilyArgs};
use superalg::identity::{self, IdentitySpec};
use superalg::SuperAlgebra;

fn workloads() -> Vec<(SuperAlgebra, IdentitySpec)> {
    let oct = catalog::build_family(
        "octonion",
        &FamilyArgs::default()
            .value("mu", 1)
            .value("beta", 1)
            .value("gamma", 1),
    )
    .expect("octonion builds");
    let grid = catalog::build_family(
        "checkerboard",
        &FamilyArgs::default().size("n", 2).size("m", 2),
    )
    .expect("checkerboard builds");
    let qn = catalog::build_family("jordan-qn", &FamilyArgs::default().size("n", 2))
        .expect("jordan-qn builds");
    vec![
        (oct, IdentitySpec::builtin("alt-left").expect("builtin")),
        (grid, IdentitySpec::builtin("assoc").expect("builtin")),
        (qn, IdentitySpec::builtin("super-jordan").expect("builtin")),
    ]
}

fn bench_sweeps(c: &mut Criterion) {
    for (alg, spec) in workloads() {
        let tuples = (alg.dim() as u64).pow(spec.arity as u32);
        let mut group = c.benchmark_group(format!("{}/{}", spec.name, alg.name()));
        group
            .sample_size(10)
            .measurement_time(Duration::from_secs(3))
            .throughput(Throughput::Elements(tuples));
        group.bench_function("pool", |b| {
            b.iter(|| {
                let report = identity::check_identity(black_box(&alg), &spec)
                    .expect("sweep runs");
                assert!(report.holds(), "bench identities must hold");
                report.tuples
            })
        });
        group.bench_function("single-thread", |b| {
            b.iter(|| {
                let report = identity::check_identity_sequential(black_box(&alg), &spec)
                    .expect("sweep runs");
                assert!(report.holds(), "bench identities must hold");
                report.tuples
            })
        });
        group.finish();
    }
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
