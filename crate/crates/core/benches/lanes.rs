//! Lane comparison benches: the data-parallel batches (minor extraction,
//! Fitting assembly, witness prefilters, batched normal forms) run under
//! whichever lane the crate was built with. Benchmark ids carry the lane
//! name, so running
//!
//! ```text
//! cargo bench -p tangent-core
//! cargo bench -p tangent-core --no-default-features
//! ```
//!
//! produces directly comparable `parallel/...` and `sequential/...`
//! entries in the same criterion baseline set.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use tangent_core::diffalg::{jacobian, omega_presentation, torsion_witness, PresentedAlgebra};
use tangent_core::groebner::{buchberger, normal_form, GbOptions};
use tangent_core::idealops::Ideal;
use tangent_core::par;
use tangent_core::polycore::{
    build_matrix, MatrixKind, MonomialOrder, PolyRing, Polynomial, PrimeField,
};

type R = Arc<PolyRing<PrimeField>>;

fn ring(n: usize) -> R {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    PolyRing::new(
        PrimeField::new(32003).unwrap(),
        vars,
        MonomialOrder::DegRevLex,
    )
    .unwrap()
}

fn bench_minors(c: &mut Criterion) {
    let r = ring(10);
    let m = build_matrix(MatrixKind::Symmetric(4), &r).unwrap();
    c.bench_function(&format!("{}/minors-2-of-symmetric-4", par::lane()), |b| {
        b.iter(|| m.minors(2).unwrap().len())
    });
    c.bench_function(&format!("{}/minors-3-of-symmetric-4", par::lane()), |b| {
        b.iter(|| m.minors(3).unwrap().len())
    });
}

fn bench_fitting_assembly(c: &mut Criterion) {
    let r = ring(6);
    let m = build_matrix(MatrixKind::Symmetric(3), &r).unwrap();
    let i = Ideal::new(&r, m.minors(2).unwrap()).unwrap();
    let jac = jacobian(&i);
    c.bench_function(&format!("{}/veronese-jacobian-3-minors", par::lane()), |b| {
        b.iter(|| jac.minors(3).unwrap().len())
    });
}

fn bench_witness_prefilter(c: &mut Criterion) {
    let r = ring(6);
    let m = build_matrix(MatrixKind::Symmetric(3), &r).unwrap();
    let i = Ideal::new(&r, m.minors(2).unwrap()).unwrap();
    let a = PresentedAlgebra::base(i);
    // warm the basis so the bench isolates the scan itself
    let _ = a.ideal().gb(&GbOptions::default()).unwrap();
    c.bench_function(&format!("{}/veronese-torsion-witness", par::lane()), |b| {
        b.iter(|| torsion_witness(&a, &GbOptions::default()).unwrap())
    });
}

fn bench_batched_normal_forms(c: &mut Criterion) {
    // reduce a batch of products against a fixed basis; membership
    // certification does exactly this shape of work
    let r = ring(6);
    let m = build_matrix(MatrixKind::Symmetric(3), &r).unwrap();
    let gens = m.minors(2).unwrap();
    let gb = buchberger(&gens, &GbOptions::default()).unwrap();
    let mut batch: Vec<Polynomial<PrimeField>> = Vec::new();
    for (i, f) in gens.iter().enumerate() {
        for g in gens.iter().skip(i) {
            batch.push(f.mul(g).unwrap());
        }
    }
    c.bench_function(&format!("{}/batched-normal-forms", par::lane()), |b| {
        b.iter(|| {
            let results = par::map_vec(batch.clone(), |f| normal_form(&f, &gb).unwrap());
            results.iter().filter(|p| p.is_zero()).count()
        })
    });
}

fn bench_sequential_core_anchor(c: &mut Criterion) {
    // one fixed-size basis computation: the engine itself is sequential
    // by design, so this anchor should read the same under both lanes
    let r = ring(5);
    let m = build_matrix(MatrixKind::Catalecticant(1), &r).unwrap();
    let gens = m.minors(2).unwrap();
    c.bench_function(&format!("{}/groebner-hankel-quadrics", par::lane()), |b| {
        b.iter(|| buchberger(&gens, &GbOptions::default()).unwrap().elements.len())
    });
    let a = PresentedAlgebra::base(Ideal::new(&r, gens.clone()).unwrap());
    c.bench_function(&format!("{}/omega-presentation-hankel", par::lane()), |b| {
        b.iter(|| omega_presentation(&a, &GbOptions::default()).unwrap().generators())
    });
}

criterion_group! {
    name = lanes;
    config = Criterion::default().sample_size(10);
    targets = bench_minors, bench_fitting_assembly, bench_witness_prefilter,
              bench_batched_normal_forms, bench_sequential_core_anchor
}
criterion_main!(lanes);
