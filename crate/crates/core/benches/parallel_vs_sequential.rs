use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hqm::angular::orbital::{orbital_commutator_check, Axis, TestFunction, DEFAULT_HALF_WIDTH};
use hqm::angular::sphere::{l2_apply_with, SphereGrid};
use hqm::suite::{run, Suite, SuiteKind, VerifyConfig};
use hqm::waves::harmonic::{AzimuthalFactor, SphericalHarmonicSpec};
use hqm::waves::quadrature::GaussLegendre;
use hqm::{Exec, ImaginaryUnit};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn orbital(c: &mut Criterion) {
    let tests = TestFunction::default_set();
    let mut g = c.benchmark_group("orbital_commutator_32");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                orbital_commutator_check(
                    Axis::X1,
                    Axis::X2,
                    ImaginaryUnit::i(),
                    1.0,
                    &tests,
                    32,
                    DEFAULT_HALF_WIDTH,
                    exec,
                )
                .unwrap()
            })
        });
    }
    g.finish();
}

fn l2(c: &mut Criterion) {
    let spec = SphericalHarmonicSpec::new(
        4,
        3,
        AzimuthalFactor::Lambda3 {
            gamma0: 0.2,
            omega0: -0.5,
        },
    )
    .unwrap();
    let y = SphereGrid::sample_harmonic(&spec, &GaussLegendre::new(64), 256);
    let mut g = c.benchmark_group("l2_apply_64x256");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| l2_apply_with(&y, 1.0, exec).unwrap())
        });
    }
    g.finish();
}

fn algebra_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("algebra_suite");
    g.sample_size(10);
    for (name, exec) in MODES {
        let cfg = VerifyConfig {
            exec,
            ..VerifyConfig::default()
        };
        g.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| run(Suite::One(SuiteKind::Algebra), cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, orbital, l2, algebra_suite);
criterion_main!(benches);
