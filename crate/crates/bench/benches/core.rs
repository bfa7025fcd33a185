use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use sqdisc_bench::{curves, eisenstein_elements, fermat_solutions, semiprimes};
use sqdisc_core::algebra::factor;
use sqdisc_core::eisenstein::eis_factor;
use sqdisc_core::families::{d_search, e_n};
use sqdisc_core::fermat::decompose;
use sqdisc_core::torsion::torsion_subgroup;
use sqdisc_core::Rat;

fn factoring(c: &mut Criterion) {
    let n = semiprimes(16, 40);
    c.bench_function("factor 80-bit semiprimes", |b| {
        b.iter(|| n.iter().map(|x| factor(black_box(x)).len()).sum::<usize>())
    });
    let g = eisenstein_elements(64, 100_000);
    c.bench_function("eis_factor norm <= 3e10", |b| {
        b.iter(|| g.iter().map(|x| eis_factor(black_box(x)).unwrap().factors.len()).sum::<usize>())
    });
}

fn fermat(c: &mut Criterion) {
    let sols = fermat_solutions(64, 30);
    c.bench_function("decompose", |b| {
        b.iter(|| sols.iter().filter(|s| decompose(black_box(s)).is_ok()).count())
    });
}

fn torsion(c: &mut Criterion) {
    let es = curves(32, 1000);
    c.bench_function("torsion_subgroup random curves", |b| {
        b.iter(|| es.iter().map(|e| torsion_subgroup(black_box(e)).unwrap().shape.order()).sum::<u32>())
    });
    let alpha: Rat = "-3/7".parse().unwrap();
    c.bench_function("torsion_subgroup E9(-3/7)", |b| {
        b.iter_batched(
            || e_n(9, &alpha).unwrap(),
            |e| torsion_subgroup(&e).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("d_search");
    g.sample_size(10);
    g.bench_function("D9 height 200", |b| b.iter(|| d_search(9, black_box(200)).unwrap()));
    g.finish();
}

criterion_group!(benches, factoring, fermat, torsion, search);
criterion_main!(benches);
