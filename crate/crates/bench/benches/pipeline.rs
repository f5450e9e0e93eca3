use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtg_core::geometry::rat;
use gtg_core::{
    extract_description, random_simple_arrangement, realize_sectors, realize_segments, reduce_sectors, reduce_segments,
    transmission_graph, LineArrangement, Point, RandomSpec, RationalRotation, Sector, Vector,
};

fn arrangement(n: usize) -> LineArrangement {
    random_simple_arrangement(RandomSpec {
        n,
        seed: 42,
        coord_bound: 50,
    })
    .unwrap()
}

fn containment(c: &mut Criterion) {
    let s = Sector::new(
        Point::new(rat(1, 3), rat(-2, 7)),
        Vector::from_ints(3, 4),
        RationalRotation::from_parameter(&rat(1, 16)),
        rat(1000, 1),
    )
    .unwrap();
    let inside = Point::new(rat(31, 10), rat(37, 10));
    let outside = Point::new(rat(-5, 3), rat(2, 9));
    c.bench_function("sector_contains/inside", |b| {
        b.iter(|| black_box(&s).contains(black_box(&inside)))
    });
    c.bench_function("sector_contains/outside", |b| {
        b.iter(|| black_box(&s).contains(black_box(&outside)))
    });
}

fn reductions(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    for n in [4, 8, 16] {
        let d = extract_description(&arrangement(n));
        group.bench_with_input(BenchmarkId::new("segments", n), &d, |b, d| {
            b.iter(|| reduce_segments(d).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sectors", n), &d, |b, d| {
            b.iter(|| reduce_sectors(d).unwrap())
        });
    }
    group.finish();
}

fn realizations(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize");
    group.sample_size(10);
    for n in [3, 6] {
        let l = arrangement(n);
        group.bench_with_input(BenchmarkId::new("segments", n), &l, |b, l| {
            b.iter(|| realize_segments(l).unwrap())
        });
    }
    for n in [2, 3, 4] {
        let l = arrangement(n);
        group.bench_with_input(BenchmarkId::new("sectors", n), &l, |b, l| {
            b.iter(|| realize_sectors(l).unwrap())
        });
    }
    group.finish();
}

fn transmission(c: &mut Criterion) {
    let mut group = c.benchmark_group("transmission_graph");
    group.sample_size(10);
    for n in [2, 3, 4] {
        let inst = realize_sectors(&arrangement(n)).unwrap().instance;
        group.bench_with_input(BenchmarkId::new("sectors", n), &inst, |b, inst| {
            b.iter(|| transmission_graph(inst))
        });
    }
    group.finish();
}

criterion_group!(benches, containment, reductions, realizations, transmission);
criterion_main!(benches);
