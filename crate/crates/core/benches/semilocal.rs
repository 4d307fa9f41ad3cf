use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semilocal::exec::map_range;
use semilocal::sparse::sparse_semilocal_with;
use semilocal::{seaweed_core, semilocal_contour, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    p.shuffle(rng);
    p
}

fn random(rng: &mut ChaCha8Rng, n: usize, sigma: u8) -> Vec<u8> {
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

fn sparse(c: &mut Criterion) {
    let mut group = c.benchmark_group("sparse_permutations");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [512usize, 2048] {
        let (x, y) = (permutation(&mut rng, n), permutation(&mut rng, n));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| sparse_semilocal_with(black_box(&x), black_box(&y), exec))
            });
        }
    }
    group.finish();
}

fn windows(c: &mut Criterion) {
    let mut group = c.benchmark_group("window_scores");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (x, y) = (random(&mut rng, 64, 4), random(&mut rng, 4096, 4));
    let cps = seaweed_core(&x, &y);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| cps.window_scores_with(black_box(64), exec).unwrap())
        });
    }
    group.finish();
}

fn batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch_seaweed");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pairs: Vec<_> = (0..64)
        .map(|_| (random(&mut rng, 256, 4), random(&mut rng, 256, 4)))
        .collect();
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                map_range(exec, pairs.len(), |k| {
                    seaweed_core(&pairs[k].0, &pairs[k].1).llcs()
                })
            })
        });
    }
    group.finish();
}

fn algorithms(c: &mut Criterion) {
    let mut group = c.benchmark_group("algorithms_dissimilar");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (x, y) = (random(&mut rng, 1024, 26), random(&mut rng, 1024, 26));
    group.bench_function("seaweed", |b| {
        b.iter(|| seaweed_core(black_box(&x), black_box(&y)))
    });
    group.bench_function("contour", |b| {
        b.iter(|| semilocal_contour(black_box(&x), black_box(&y)))
    });
    group.bench_function("sparse", |b| {
        b.iter(|| sparse_semilocal_with(black_box(&x), black_box(&y), Execution::default()))
    });
    group.finish();
}

criterion_group!(benches, sparse, windows, batch, algorithms);
criterion_main!(benches);
