use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

use cyclo_dunkl::{quadrature, special, MultiIndex, OperatorContext, QuadratureConfig, TruncatedSeries};

fn bench_intertwiner(c: &mut Criterion) {
    let ctx = OperatorContext::from_parts(4, &[0.3, 0.8, 1.2]).unwrap();
    let f = TruncatedSeries::exp(Complex64::new(0.4, 0.2), 60);
    c.bench_function("intertwiner m=4 order 60", |b| {
        b.iter(|| ctx.intertwiner_apply(black_box(&f)).unwrap())
    });
}

fn bench_eigen_series(c: &mut Criterion) {
    let ctx = OperatorContext::from_parts(3, &[1.0 / 3.0, 2.0 / 3.0]).unwrap();
    let mu = ctx.mu_from_lambda(Complex64::ONE);
    c.bench_function("eigen series m=3 order 200", |b| {
        b.iter(|| ctx.eigen_series(black_box(mu), 200).unwrap())
    });
}

fn bench_hyper_bessel(c: &mut Criterion) {
    let nu = MultiIndex::new(vec![0.2, 0.4]);
    let x = Complex64::new(2.0, 0.0);
    c.bench_function("hyper-bessel eval m=3 x=2", |b| {
        b.iter(|| special::hyper_bessel_eval(black_box(&nu), 3, black_box(x)).unwrap())
    });
}

fn bench_ek_quadrature(c: &mut Criterion) {
    let config = QuadratureConfig::default();
    c.bench_function("fractional integral 48-node rule", |b| {
        b.iter(|| {
            quadrature::ek_integral(
                black_box(0.7),
                black_box(-0.25),
                black_box(2.0),
                |y| Complex64::new(y.cos(), 0.0),
                black_box(1.3),
                &config,
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_intertwiner,
    bench_eigen_series,
    bench_hyper_bessel,
    bench_ek_quadrature
);
criterion_main!(benches);
