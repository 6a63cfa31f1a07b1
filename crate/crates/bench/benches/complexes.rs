use std::hint::black_box;

use cohomlie::linalg::{rat, rref, Matrix, Rational};
use cohomlie::{
    compatible_cohomology, fixtures, hom_cochain_basis, nr_bracket, plain_cohomology, HomLieStructure, Representation,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn dense(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    let mut s = 7i64;
    for i in 0..n {
        for j in 0..n {
            s = (s * 48271) % 2147483647;
            m.set(i, j, Rational::new((s % 11 - 5).into(), (1 + s % 3).into()));
        }
    }
    m
}

fn linalg(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [8, 16, 24] {
        let m = dense(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| rref(black_box(m))));
    }
    g.finish();
}

fn plain(c: &mut Criterion) {
    let mut g = c.benchmark_group("plain_cohomology");
    for (name, l) in [("h3", fixtures::h3()), ("g4a0", fixtures::g4a(rat(0)))] {
        let v = Representation::adjoint(&l);
        for n in 1..=3 {
            g.bench_function(BenchmarkId::new(name, n), |b| b.iter(|| plain_cohomology(&l, &v, black_box(n)).unwrap()));
        }
    }
    g.finish();
}

fn compatible(c: &mut Criterion) {
    let pair = fixtures::h3_nijenhuis_pair();
    let v = Representation::adjoint(&pair);
    let mut g = c.benchmark_group("compatible_cohomology");
    for n in 1..=2 {
        g.bench_function(BenchmarkId::new("h3_pair", n), |b| {
            b.iter(|| compatible_cohomology(&pair, &v, black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn bracket(c: &mut Criterion) {
    let l = fixtures::g4a(rat(0));
    let alpha = l.alpha().clone();
    let p = hom_cochain_basis(&alpha, &alpha, 2).unwrap().into_iter().next().unwrap();
    let q = hom_cochain_basis(&alpha, &alpha, 3).unwrap().into_iter().next().unwrap();
    c.bench_function("nr_bracket/g4a0_2x3", |b| b.iter(|| nr_bracket(black_box(&p), black_box(&q), &alpha).unwrap()));
}

criterion_group!(benches, linalg, plain, compatible, bracket);
criterion_main!(benches);
