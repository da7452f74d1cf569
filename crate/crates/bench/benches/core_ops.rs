use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use psigma_core::algebra::{
    sampling, CapacityTier, GradedBasis, QuadraticPresentation, Rewriter, Variant,
};
use psigma_core::freegroup::{verify_mccool_presentation, PresentationVariant};
use psigma_core::zerodiv::{certificate_m, certificate_n};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_presentation_verification(c: &mut Criterion) {
    c.bench_function("verify_presentation_full_n4", |b| {
        b.iter(|| verify_mccool_presentation(4, PresentationVariant::Full).unwrap())
    });
    c.bench_function("verify_presentation_full_n6", |b| {
        b.iter(|| verify_mccool_presentation(6, PresentationVariant::Full).unwrap())
    });
}

fn bench_graded_basis(c: &mut Criterion) {
    let tier = CapacityTier::default();
    c.bench_function("graded_basis_full_n4", |b| {
        let pres = QuadraticPresentation::new(4, Variant::Full).unwrap();
        b.iter(|| GradedBasis::compute(&pres, &tier).unwrap())
    });
    c.bench_function("graded_basis_plus_n5", |b| {
        let pres = QuadraticPresentation::new(5, Variant::Plus).unwrap();
        b.iter(|| GradedBasis::compute(&pres, &tier).unwrap())
    });
    let mut slow = c.benchmark_group("large");
    slow.sample_size(10);
    slow.bench_function("graded_basis_full_n5", |b| {
        let pres = QuadraticPresentation::new(5, Variant::Full).unwrap();
        b.iter(|| GradedBasis::compute(&pres, &tier).unwrap())
    });
    slow.finish();
}

fn bench_certificates(c: &mut Criterion) {
    let tier = CapacityTier::default();
    let full4 = QuadraticPresentation::new(4, Variant::Full).unwrap();
    let full4_basis = GradedBasis::compute(&full4, &tier).unwrap();
    c.bench_function("certificate_m_n4", |b| {
        b.iter(|| certificate_m(&full4_basis).unwrap())
    });
    let plus5 = QuadraticPresentation::new(5, Variant::Plus).unwrap();
    let plus5_basis = GradedBasis::compute(&plus5, &tier).unwrap();
    c.bench_function("certificate_n_n5", |b| {
        b.iter(|| certificate_n(&plus5_basis).unwrap())
    });
}

fn bench_reduction_paths(c: &mut Criterion) {
    let tier = CapacityTier::default();
    let pres = QuadraticPresentation::new(4, Variant::Full).unwrap();
    let basis = GradedBasis::compute(&pres, &tier).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples: Vec<_> = (0..64)
        .map(|_| sampling::random_homogeneous(&pres, 3, 4, &mut rng))
        .collect();
    c.bench_function("normal_form_full_n4_deg3", |b| {
        b.iter(|| {
            for e in &samples {
                std::hint::black_box(basis.normal_form(e));
            }
        })
    });
    c.bench_function("rewrite_reduce_full_n4_deg3", |b| {
        // Fresh memo per iteration so the bench measures the rewriting work.
        b.iter_batched(
            || Rewriter::new(&pres),
            |mut rw| {
                for e in &samples {
                    std::hint::black_box(rw.reduce(e).unwrap());
                }
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_presentation_verification,
    bench_graded_basis,
    bench_certificates,
    bench_reduction_paths
);
criterion_main!(benches);
