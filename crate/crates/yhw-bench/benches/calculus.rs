//! Benchmarks for the combinatorial side: decisions and matching.

use criterion::{criterion_group, criterion_main, Criterion};

use yhw_core::rat::Rat;
use yhw_core::sample::{random_parity, random_weight, rng_from_seed};
use yhw_core::{decide_finite_dimensional, is_p_shift_ratio, MonicPoly, RationalFn};

fn bench_decide(c: &mut Criterion) {
    let mut rng = rng_from_seed(1);
    let cases: Vec<_> = (0..64)
        .map(|_| {
            let sigma = random_parity(&mut rng, 4);
            let weight = random_weight(&mut rng, 4, 3);
            (sigma, weight)
        })
        .collect();
    c.bench_function("decide_batch64_len4_level3", |b| {
        b.iter(|| {
            for (sigma, weight) in &cases {
                let _ = decide_finite_dimensional(sigma, weight).unwrap();
            }
        })
    });
}

fn bench_matching(c: &mut Criterion) {
    // A long telescoping ratio: P of degree 24 from strings over two classes.
    let p = MonicPoly::from_root_values(
        (0..12)
            .flat_map(|k| [Rat::from_int(k), Rat::new(2 * k + 1, 2)])
            .collect(),
    );
    let f = RationalFn::reduce(p.shift(&Rat::one()), p);
    c.bench_function("shift_ratio_degree24", |b| {
        b.iter(|| {
            let q = is_p_shift_ratio(&f).unwrap();
            assert_eq!(q.degree(), 24);
        })
    });
}

criterion_group!(benches, bench_decide, bench_matching);
criterion_main!(benches);
