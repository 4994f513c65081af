//! Matrix-oracle benchmarks: relation checking and quotient computation at
//! the dimensions the acceptance suite exercises.

use criterion::{criterion_group, criterion_main, Criterion};

use yhw_core::rat::Rat;
use yhw_core::rep::{
    check_defining_relations, irreducible_quotient, tensor_modules, verify_odd_reflection,
    YangianRep,
};
use yhw_core::ParitySeq;

fn sigma(s: &str) -> ParitySeq {
    s.parse().unwrap()
}

fn triple_vector_tensor(s: &str) -> YangianRep {
    let shifts = [Rat::zero(), Rat::one(), Rat::new(-1, 2)];
    let mut rep: Option<YangianRep> = None;
    for a in &shifts {
        let factor = YangianRep::vector_module(&sigma(s), a);
        rep = Some(match rep {
            None => factor,
            Some(r) => tensor_modules(&r, &factor).unwrap(),
        });
    }
    rep.unwrap()
}

fn bench_relations(c: &mut Criterion) {
    let dim27 = triple_vector_tensor("101");
    let mut group = c.benchmark_group("defining_relations");
    group.sample_size(10);
    group.bench_function("vector_tensor_dim27_level3", |b| {
        b.iter(|| {
            let report = check_defining_relations(&dim27);
            assert!(report.ok);
        })
    });
    let dim8 = {
        let a = YangianRep::vector_module(&sigma("01"), &Rat::zero());
        let b = YangianRep::vector_module(&sigma("01"), &Rat::one());
        let c2 = YangianRep::vector_module(&sigma("01"), &Rat::from_int(3));
        tensor_modules(&tensor_modules(&a, &b).unwrap(), &c2).unwrap()
    };
    group.bench_function("vector_tensor_dim8_level3", |b| {
        b.iter(|| {
            let report = check_defining_relations(&dim8);
            assert!(report.ok);
        })
    });
    group.finish();
}

fn bench_quotient_and_reflection(c: &mut Criterion) {
    let mut group = c.benchmark_group("module_analysis");
    group.sample_size(10);

    let reducible = {
        let a = YangianRep::vector_module(&sigma("01"), &Rat::zero());
        let b = YangianRep::vector_module(&sigma("01"), &Rat::from_int(-1));
        tensor_modules(&a, &b).unwrap()
    };
    group.bench_function("irreducible_quotient_dim4", |b| {
        b.iter(|| {
            let q = irreducible_quotient(&reducible).unwrap();
            assert_eq!(q.dim(), 2);
        })
    });

    let tensor101 = {
        let a = YangianRep::vector_module(&sigma("101"), &Rat::zero());
        let b = YangianRep::vector_module(&sigma("101"), &Rat::from_int(2));
        irreducible_quotient(&tensor_modules(&a, &b).unwrap()).unwrap()
    };
    group.bench_function("verify_odd_reflection_dim9", |b| {
        b.iter(|| {
            let report = verify_odd_reflection(&tensor101, 1).unwrap();
            assert!(report.ok());
        })
    });
    group.finish();
}

criterion_group!(benches, bench_relations, bench_quotient_and_reflection);
criterion_main!(benches);
