use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ss2cat::based_ring::{fibonacci_ring, group_ring, validate_zplus_ring};
use ss2cat::dy::{build_dy_complex, dy_cohomology_dims};
use ss2cat::fusion2::{finite_field_tensor, pointed_braided_product};
use ss2cat::pointed::{module_classes, subgroups};
use ss2cat::zplus_module::{certificate_for, enumerate_irreducible_modules};
use ss2cat::{BraidingParam, FieldProfile, FieldTag, FiniteAbelianGroup, PointedFunctorData, SearchMode};

fn modules(c: &mut Criterion) {
    let mut group = c.benchmark_group("irreducible_modules");
    for (name, data) in [
        ("Z[Z/2]", group_ring(&[2]).unwrap()),
        ("Z[Z/3]", group_ring(&[3]).unwrap()),
        ("Fibonacci", fibonacci_ring()),
    ] {
        let cert = certificate_for(&validate_zplus_ring(data).unwrap()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &cert, |b, cert| {
            b.iter(|| enumerate_irreducible_modules(cert, SearchMode::Proven).unwrap())
        });
    }
    group.finish();
}

fn dy(c: &mut Criterion) {
    let mut group = c.benchmark_group("dy_dims");
    for (orders, field) in [(vec![3], FieldTag::Rational), (vec![2, 2], FieldTag::Prime(2)), (vec![5], FieldTag::Cyclotomic(3))] {
        let g = FiniteAbelianGroup::from_cyclic_factors(&orders).unwrap();
        let f = PointedFunctorData::identity(g.clone(), field);
        group.bench_function(format!("{g} over {field:?}"), |b| {
            b.iter(|| dy_cohomology_dims(&build_dy_complex(&f, 4).unwrap()))
        });
    }
    group.finish();
}

fn pointed(c: &mut Criterion) {
    let mut group = c.benchmark_group("subgroups");
    for orders in [vec![2, 2, 2, 2], vec![4, 4], vec![2, 4, 8]] {
        let g = FiniteAbelianGroup::from_cyclic_factors(&orders).unwrap();
        group.bench_function(g.to_string(), |b| b.iter(|| subgroups(&g).unwrap()));
    }
    group.finish();
}

fn fusion(c: &mut Criterion) {
    let mut group = c.benchmark_group("fusion2");
    let ac0 = FieldProfile::alg_closed(0).unwrap();
    for p in [2u64, 3] {
        let classes = module_classes(&FiniteAbelianGroup::new(vec![p]).unwrap(), &ac0).unwrap();
        let vect = classes.iter().find(|c| c.subgroup.order == p).unwrap().clone();
        group.bench_function(format!("pointed Z/{p}"), |b| {
            b.iter(|| pointed_braided_product(p, BraidingParam { p, zeta_exponent: 1 }, &vect, &vect).unwrap())
        });
    }
    group.bench_function("ffield 2 6 4", |b| b.iter(|| finite_field_tensor(2, 6, 4).unwrap()));
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = modules, dy, pointed, fusion
}
criterion_main!(benches);
