use attract::{
    approx, attractor_from_lz77, bidirectional_parse_from_attractor, build_index,
    collage_from_attractor, lz77_parse, rlbwt_build, validate_k_attractor,
};
use attract_bench::Family;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use std::hint::black_box;

const SIZES: [usize; 3] = [1 << 10, 1 << 13, 1 << 16];

fn compressors(c: &mut Criterion) {
    let mut group = c.benchmark_group("compress");
    group.sample_size(10);
    for f in Family::ALL {
        for n in SIZES {
            let t = f.text(n);
            group.bench_with_input(
                BenchmarkId::new(format!("lz77/{}", f.name()), n),
                &t,
                |b, t| b.iter(|| lz77_parse(black_box(t))),
            );
            let ts = t.with_sentinel();
            group.bench_with_input(
                BenchmarkId::new(format!("rlbwt/{}", f.name()), n),
                &ts,
                |b, t| b.iter(|| rlbwt_build(black_box(t)).unwrap()),
            );
        }
    }
    group.finish();
}

fn validation(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate");
    group.sample_size(10);
    for f in Family::ALL {
        for n in SIZES {
            let t = f.text(n);
            let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
            group.bench_with_input(BenchmarkId::new(f.name(), n), &(t, g), |b, (t, g)| {
                b.iter(|| validate_k_attractor(t, g, t.len()).unwrap())
            });
        }
    }
    group.finish();
}

fn approximation(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx");
    group.sample_size(10);
    for f in Family::ALL {
        let t = f.text(1 << 12);
        group.bench_function(BenchmarkId::new("2k/k=8", f.name()), |b| {
            b.iter(|| approx::k_attractor_2k(&t, 8).unwrap())
        });
        group.bench_function(BenchmarkId::new("greedy/k=8", f.name()), |b| {
            b.iter(|| approx::k_attractor_greedy(&t, 8).unwrap())
        });
    }
    group.finish();
}

fn reductions(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    group.sample_size(10);
    for f in Family::ALL {
        let t = f.text(1 << 14);
        let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
        group.bench_function(BenchmarkId::new("parse", f.name()), |b| {
            b.iter(|| bidirectional_parse_from_attractor(&t, &g).unwrap())
        });
        group.bench_function(BenchmarkId::new("collage", f.name()), |b| {
            b.iter(|| collage_from_attractor(&t, &g).unwrap())
        });
    }
    group.finish();
}

fn random_access(c: &mut Criterion) {
    let mut group = c.benchmark_group("index");
    group.sample_size(10);
    let n = 1 << 16;
    for f in Family::ALL {
        let t = f.text(n);
        let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
        for tau in [2, 3, 8] {
            group.bench_function(
                BenchmarkId::new(format!("build/tau={tau}"), f.name()),
                |b| b.iter(|| build_index(&t, &g, tau).unwrap()),
            );
            let index = build_index(&t, &g, tau).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
            let queries: Vec<usize> = (0..1024).map(|_| rng.gen_range(1..=n - 63)).collect();
            group.bench_function(
                BenchmarkId::new(format!("extract64/tau={tau}"), f.name()),
                |b| {
                    b.iter(|| {
                        for &i in &queries {
                            black_box(index.extract(i, 64).unwrap());
                        }
                    })
                },
            );
        }
    }
    group.finish();
}

criterion_group!(
    benches,
    compressors,
    validation,
    approximation,
    reductions,
    random_access
);
criterion_main!(benches);
