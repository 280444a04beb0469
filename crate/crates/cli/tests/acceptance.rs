//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (tolerance 0): counts, classes and matrix identities are
//! integers or exact field elements.

use std::collections::BTreeSet;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use ss2cat::arith::algebra::abelian_group_algebra;
use ss2cat::based_ring::{
    fibonacci_ring, find_weak_based_involutions, group_ring, permute_ring, real_module_fusion_ring,
    validate_zplus_ring,
};
use ss2cat::dy::{build_dy_complex, dy_cohomology_dims, IntSparseMatrix};
use ss2cat::fusion2::{finite_field_tensor, pointed_braided_product, real_division_tensor};
use ss2cat::pointed::{h2_of_abelian, module_classes, square_class_witnesses};
use ss2cat::skeleton::{mod_vect_real_skeleton, mod_vect_zp_skeleton, truncated_family_2vect_fp, validate_skeleton};
use ss2cat::zplus_module::{certificate_for, enumerate_irreducible_modules, enumerate_ring_homs};
use ss2cat::{
    split_commutative_algebra, BasedRingData, BraidingParam, DivisionAlgebraClass, DivisionAlgebraLabel, FieldElem,
    FieldProfile, FieldTag, FiniteAbelianGroup, ModuleClass, PointedFunctorData, SearchMode, SkeletonError,
    TwoCatSkeleton,
};

/// Exact equality everywhere.
const TOLERANCE: u32 = 0;
/// Cases per property suite.
const PROPERTY_CASES: u32 = 1000;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn cert(data: BasedRingData) -> Result<ss2cat::WeakBasedCertificate, String> {
    let ring = validate_zplus_ring(data).map_err(err)?;
    certificate_for(&ring).map_err(err)
}

fn module_keys(cert: &ss2cat::WeakBasedCertificate, mode: SearchMode) -> Result<BTreeSet<(usize, Vec<Vec<Vec<u64>>>)>, String> {
    Ok(enumerate_irreducible_modules(cert, mode)
        .map_err(err)?
        .iter()
        .map(|m| (m.rank(), m.action().to_vec()))
        .collect())
}

fn criterion_1() -> Check {
    for (name, data, expected) in [
        ("Z[Z/2]", group_ring(&[2]).map_err(err)?, 2),
        ("Z[Z/3]", group_ring(&[3]).map_err(err)?, 2),
        ("Fibonacci", fibonacci_ring(), 1),
    ] {
        let c = cert(data)?;
        let proven = module_keys(&c, SearchMode::Proven)?;
        ensure!(proven.len() == expected, "{name}: {} irreducible modules, expected {expected}", proven.len());
        let widened = module_keys(&c, SearchMode::Widened)?;
        ensure!(widened == proven, "{name}: doubled caps found {} classes instead of {}", widened.len(), proven.len());
    }
    Ok(())
}

fn criterion_2() -> Check {
    let z2 = cert(group_ring(&[2]).map_err(err)?)?;
    let fib = cert(fibonacci_ring())?;
    let z = cert(group_ring(&[1]).map_err(err)?)?;
    for (name, s, t, expected) in [("Z[Z/2] -> Z[Z/2]", &z2, &z2, 2), ("Fibonacci -> Z", &fib, &z, 0)] {
        let proven = enumerate_ring_homs(s, t, SearchMode::Proven).map_err(err)?;
        ensure!(proven.len() == expected, "{name}: {} homs, expected {expected}", proven.len());
        let widened = enumerate_ring_homs(s, t, SearchMode::Widened).map_err(err)?;
        ensure!(widened == proven, "{name}: doubled caps changed the hom set");
    }
    Ok(())
}

fn criterion_3() -> Check {
    let real = mod_vect_real_skeleton().compactness_report();
    ensure!((real.num_simples, real.num_components) == (3, 1), "Mod(Vect_R): {real:?}");
    for p in [2, 3, 5] {
        let zp = mod_vect_zp_skeleton(p, 0).map_err(err)?.compactness_report();
        ensure!((zp.num_simples, zp.num_components) == (2, 1), "Mod(Vect(Z/{p})) char 0: {zp:?}");
    }
    let mut last = 0;
    for depth in [3, 5, 8] {
        let r = truncated_family_2vect_fp(2, depth).map_err(err)?.compactness_report();
        ensure!(r.num_components == 1, "depth {depth}: {} components", r.num_components);
        ensure!(r.num_simples > last, "depth {depth}: simples did not grow ({} after {last})", r.num_simples);
        last = r.num_simples;
    }
    Ok(())
}

/// `|H^2(Z/2 x Z/2; Z/2)|` by enumerating all 2^16 functions `G x G -> Z/2`.
fn klein_h2_mod2_brute_force() -> usize {
    let mul = |a: usize, b: usize| a ^ b;
    let mut cocycles = 0usize;
    for f in 0u32..1 << 16 {
        let v = |g: usize, h: usize| (f >> (4 * g + h)) & 1;
        let ok = (0..4).all(|g| {
            (0..4).all(|h| (0..4).all(|k| (v(h, k) + v(g, mul(h, k)) + v(mul(g, h), k) + v(g, h)) % 2 == 0))
        });
        cocycles += ok as usize;
    }
    let mut coboundaries = BTreeSet::new();
    for c in 0u32..16 {
        let cv = |g: usize| (c >> g) & 1;
        let mut f = 0u32;
        for g in 0..4 {
            for h in 0..4 {
                f |= ((cv(g) + cv(h) + cv(mul(g, h))) % 2) << (4 * g + h);
            }
        }
        coboundaries.insert(f);
    }
    cocycles / coboundaries.len()
}

fn criterion_4() -> Check {
    let ac0 = FieldProfile::alg_closed(0).map_err(err)?;
    for p in [2, 3, 5] {
        let g = FiniteAbelianGroup::new(vec![p]).map_err(err)?;
        let c0 = module_classes(&g, &ac0).map_err(err)?;
        ensure!(c0.len() == 2 && c0.iter().all(|c| c.separable), "(Z/{p}, ac0): {c0:?}");
        let acp = FieldProfile::alg_closed(p).map_err(err)?;
        let cp = module_classes(&g, &acp).map_err(err)?;
        let separable: Vec<&ModuleClass> = cp.iter().filter(|c| c.separable).collect();
        ensure!(separable.len() == 1 && separable[0].subgroup.order == 1, "(Z/{p}, ac{p}): {cp:?}");
    }
    let klein = FiniteAbelianGroup::new(vec![2, 2]).map_err(err)?;
    let classes = module_classes(&klein, &ac0).map_err(err)?;
    ensure!(classes.len() == 6, "Klein: {} classes", classes.len());
    // |H^2(G; Z/m)| = |Hom(M(G), Z/m)| |Ext(G, Z/m)| with |Ext(G, Z/2)| = |G| = 4.
    let schur_multiplier = klein_h2_mod2_brute_force() / 4;
    let h2 = h2_of_abelian(&klein, &ac0).map_err(err)?.class_count();
    ensure!(schur_multiplier == 2 && h2 == Some(2), "H^2(Klein): oracle {schur_multiplier}, library {h2:?}");
    Ok(())
}

fn abelian_groups_up_to_8() -> Vec<Vec<u64>> {
    vec![
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
    ]
}

/// `d2 * d1` evaluated over `field`.
fn composite_is_zero(field: FieldTag, d2: &IntSparseMatrix, d1: &IntSparseMatrix) -> bool {
    d2.entries.iter().all(|row| {
        let mut acc: std::collections::BTreeMap<usize, FieldElem> = std::collections::BTreeMap::new();
        for &(k, a) in row {
            for &(c, b) in &d1.entries[k] {
                let term = field.from_i64(a) * field.from_i64(b);
                let slot = acc.entry(c).or_insert_with(|| field.zero());
                *slot = slot.clone() + term;
            }
        }
        acc.values().all(FieldElem::is_zero)
    })
}

fn criterion_5() -> Check {
    for p in [2u64, 3, 5] {
        let g = FiniteAbelianGroup::new(vec![p]).map_err(err)?;
        for (field, expected) in [(FieldTag::Prime(p), vec![1, 1, 1, 1]), (FieldTag::Rational, vec![1, 0, 0, 0])] {
            let c = build_dy_complex(&PointedFunctorData::identity(g.clone(), field), 4).map_err(err)?;
            let dims = dy_cohomology_dims(&c);
            ensure!(dims == expected, "Z/{p} over {field:?}: {dims:?}");
        }
    }
    let fields = [FieldTag::Rational, FieldTag::Prime(2), FieldTag::Prime(3), FieldTag::Cyclotomic(3)];
    for orders in abelian_groups_up_to_8() {
        let g = FiniteAbelianGroup::from_cyclic_factors(&orders).map_err(err)?;
        for field in fields {
            let c = build_dy_complex(&PointedFunctorData::identity(g.clone(), field), 4).map_err(err)?;
            for n in 0..3 {
                ensure!(composite_is_zero(field, c.delta(n + 1), c.delta(n)), "{orders:?} over {field:?}: delta^{} delta^{n} != 0", n + 1);
            }
        }
    }
    Ok(())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn criterion_6() -> Check {
    use DivisionAlgebraLabel::*;
    let cls = DivisionAlgebraClass::of;
    let table = [
        (Complexification, Complexification, vec![Complexification, Complexification]),
        (Complexification, Quaternion, vec![Complexification]),
        (Quaternion, Complexification, vec![Complexification]),
        (Quaternion, Quaternion, vec![Base]),
    ];
    for (a, b, expected) in table {
        let got: Vec<DivisionAlgebraLabel> =
            real_division_tensor(cls(a), cls(b)).map_err(err)?.summands.iter().map(|c| c.label).collect();
        ensure!(got == expected, "{a} x {b}: {got:?}");
    }
    for x in [Base, Complexification, Quaternion] {
        let got: Vec<DivisionAlgebraLabel> =
            real_division_tensor(cls(Base), cls(x)).map_err(err)?.summands.iter().map(|c| c.label).collect();
        ensure!(got == vec![x], "unit law fails for {x}: {got:?}");
    }

    let ac0 = FieldProfile::alg_closed(0).map_err(err)?;
    for p in [2u64, 3, 5] {
        let classes = module_classes(&FiniteAbelianGroup::new(vec![p]).map_err(err)?, &ac0).map_err(err)?;
        let by_order = |n: u64| classes.iter().find(|c| c.subgroup.order == n).cloned().expect("class present");
        let (vect_g, vect) = (by_order(1), by_order(p));
        for zeta_exponent in 0..p {
            let zeta = BraidingParam { p, zeta_exponent };
            let got = pointed_braided_product(p, zeta, &vect, &vect).map_err(err)?.summands;
            let expected = if zeta_exponent == 0 { vec![vect.clone(); p as usize] } else { vec![vect_g.clone()] };
            ensure!(got == expected, "p={p}, zeta^{zeta_exponent}: Vect x Vect = {got:?}");
            for x in [&vect_g, &vect] {
                let unit = pointed_braided_product(p, zeta, &vect_g, x).map_err(err)?.summands;
                ensure!(unit == vec![x.clone()], "p={p}, zeta^{zeta_exponent}: unit law fails: {unit:?}");
            }
        }
    }

    for p in [2u64, 3, 5] {
        for q in 1..=6u32 {
            for r in 1..=6u32 {
                if p * u64::from(q.max(r)) > 64 {
                    continue;
                }
                let prod = finite_field_tensor(p, q, r).map_err(err)?;
                let (g, l) = (gcd(q, r), q * r / gcd(q, r));
                let expected = vec![cls(FiniteExt(l)); g as usize];
                ensure!(prod.summands == expected, "F_{p}^{q} x F_{p}^{r}: {:?}", prod.summands);
                let divides = q % r == 0 || r % q == 0;
                ensure!(prod.note.is_some() != divides, "F_{p}^{q} x F_{p}^{r}: note {:?}", prod.note);
            }
        }
    }
    let flagged = finite_field_tensor(2, 3, 2).map_err(err)?;
    ensure!(flagged.summands == vec![cls(FiniteExt(6))], "(2,3,2): {:?}", flagged.summands);
    ensure!(flagged.note.as_deref().is_some_and(|n| n.contains("does not divide")), "(2,3,2): note {:?}", flagged.note);
    Ok(())
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == n)
}

fn criterion_7() -> Check {
    let w = square_class_witnesses(10).map_err(err)?;
    ensure!(w.len() == 7, "bound 10: {w:?}");
    for (i, &a) in w.iter().enumerate() {
        for &b in &w[i + 1..] {
            ensure!(!is_square(a * b), "{a} and {b} are in the same square class");
        }
    }
    let mut last = 0;
    for bound in [1, 10, 100, 1_000, 10_000, 100_000] {
        let n = square_class_witnesses(bound).map_err(err)?.len();
        ensure!(n > last || bound == 1, "bound {bound}: {n} witnesses after {last}");
        last = n;
    }
    Ok(())
}

fn runner() -> TestRunner {
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn elem_of(tag: FieldTag) -> impl Strategy<Value = FieldElem> {
    prop::collection::vec((-20i64..=20, 1i64..=6), tag.degree()).prop_map(move |coeffs| {
        coeffs.iter().enumerate().fold(tag.zero(), |acc, (i, &(num, den))| {
            let den = if tag.characteristic() == 0 { den } else { 1 };
            let c = tag.from_i64(num) * tag.from_i64(den).inv().expect("nonzero");
            let basis = if i == 0 { tag.one() } else { tag.zeta_power(i as i64).expect("cyclotomic") };
            acc + c * basis
        })
    })
}

fn field_triple() -> impl Strategy<Value = (FieldElem, FieldElem, FieldElem)> {
    let tags = vec![
        FieldTag::Rational,
        FieldTag::Prime(2),
        FieldTag::Prime(7),
        FieldTag::Prime(1_000_000_007),
        FieldTag::Cyclotomic(3),
        FieldTag::Cyclotomic(4),
        FieldTag::Cyclotomic(5),
    ];
    prop::sample::select(tags).prop_flat_map(|t| (elem_of(t), elem_of(t), elem_of(t)))
}

fn prop_field_axioms() -> Check {
    runner()
        .run(&field_triple(), |(a, b, c)| {
            let t = a.tag();
            prop_assert_eq!(a.clone() + &b, b.clone() + &a);
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            prop_assert_eq!((a.clone() + &b) + &c, a.clone() + (b.clone() + &c));
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * (b.clone() * &c));
            prop_assert_eq!(a.clone() * (b.clone() + &c), a.clone() * &b + a.clone() * &c);
            prop_assert_eq!(a.clone() + t.zero(), a.clone());
            prop_assert_eq!(a.clone() * t.one(), a.clone());
            prop_assert!((a.clone() + (-&a)).is_zero());
            prop_assert_eq!((a.clone() - &b) + &b, a.clone());
            match a.inv() {
                Some(i) => prop_assert!((a.clone() * i).is_one()),
                None => prop_assert!(a.is_zero()),
            }
            Ok(())
        })
        .map_err(err)
}

fn small_ring() -> impl Strategy<Value = BasedRingData> {
    let base = prop::sample::select(vec![
        Some(vec![1u64]),
        Some(vec![2]),
        Some(vec![3]),
        Some(vec![4]),
        Some(vec![2, 2]),
        Some(vec![5]),
        Some(vec![6]),
        None,
        Some(vec![0]),
    ]);
    base.prop_flat_map(|orders| {
        let data = match orders {
            Some(o) if o == vec![0] => real_module_fusion_ring(),
            Some(o) => group_ring(&o).expect("valid orders"),
            None => fibonacci_ring(),
        };
        let rank = data.rank;
        (Just(data), Just((0..rank).collect::<Vec<usize>>()).prop_shuffle())
    })
    .prop_map(|(data, perm)| {
        let mut d = permute_ring(&data, &perm);
        d.involution = None;
        d
    })
}

fn prop_tau_condition() -> Check {
    runner()
        .run(&small_ring(), |data| {
            let nested = data.nested_mult();
            let r = data.rank;
            let i0: Vec<usize> = (0..r).filter(|&k| data.unit_coeffs[k] > 0).collect();
            let tau = |i: usize, j: usize| i0.iter().map(|&k| nested[i][j][k]).sum::<i64>();
            let ring = validate_zplus_ring(data.clone()).expect("valid ring");
            for cert in find_weak_based_involutions(&ring).expect("rank within guard") {
                let inv = cert.involution();
                for i in 0..r {
                    prop_assert_eq!(inv[inv[i]], i);
                    for j in 0..r {
                        prop_assert_eq!(tau(i, j) > 0, j == inv[i], "tau(b{} b{})", i, j);
                    }
                    prop_assert_eq!(cert.t_values[i] as i64, tau(i, inv[i]));
                }
            }
            Ok(())
        })
        .map_err(err)
}

fn prop_idempotent_completeness() -> Check {
    let strategy = (
        prop::sample::select(vec![
            FieldTag::Rational,
            FieldTag::Prime(2),
            FieldTag::Prime(3),
            FieldTag::Prime(5),
            FieldTag::Cyclotomic(3),
            FieldTag::Cyclotomic(4),
        ]),
        prop::collection::vec(1u64..=4, 1..=2),
    );
    runner()
        .run(&strategy, |(field, moduli)| {
            let alg = abelian_group_algebra(field, &moduli);
            let blocks = split_commutative_algebra(&alg).expect("group algebras are commutative");
            let mut sum = vec![field.zero(); alg.dim()];
            for (i, b) in blocks.iter().enumerate() {
                for (s, x) in sum.iter_mut().zip(&b.idempotent) {
                    *s = s.clone() + x;
                }
                prop_assert_eq!(alg.mul(&b.idempotent, &b.idempotent), b.idempotent.clone());
                prop_assert!(b.idempotent.iter().any(|x| !x.is_zero()));
                for c in &blocks[i + 1..] {
                    prop_assert!(alg.mul(&b.idempotent, &c.idempotent).iter().all(FieldElem::is_zero));
                }
            }
            prop_assert_eq!(&sum[..], alg.unit());
            prop_assert_eq!(blocks.iter().map(|b| b.dim).sum::<usize>(), alg.dim());
            Ok(())
        })
        .map_err(err)
}

fn skeleton_input() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..=7)
        .prop_flat_map(|n| (prop::collection::vec(0usize..4, n), prop::option::of((0..n, 0..n))))
        .prop_map(|(labels, flip)| {
            let n = labels.len();
            let mut m: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| labels[i] == labels[j]).collect()).collect();
            if let Some((i, j)) = flip {
                if i != j {
                    m[i][j] = !m[i][j];
                    m[j][i] = m[i][j];
                }
            }
            m
        })
}

fn prop_skeleton_schur_closure() -> Check {
    runner()
        .run(&skeleton_input(), |m| {
            let n = m.len();
            let transitive =
                (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(m[i][j] && m[j][k]) || m[i][k])));
            let skeleton = TwoCatSkeleton {
                simples: (0..n).map(|i| format!("S{i}")).collect(),
                hom_nonzero: m.clone(),
                hom_dims: None,
                max_end_dim: None,
                end_ring: None,
            };
            match validate_skeleton(skeleton) {
                Ok(v) => {
                    prop_assert!(transitive);
                    let comps = v.pi0();
                    let mut seen = vec![false; n];
                    for comp in &comps {
                        for &a in comp {
                            prop_assert!(!seen[a]);
                            seen[a] = true;
                            for &b in comp {
                                prop_assert!(m[a][b]);
                            }
                        }
                    }
                    prop_assert!(seen.iter().all(|&s| s));
                    prop_assert_eq!(v.compactness_report().num_components, comps.len());
                }
                Err(SkeletonError::SchurViolation(i, j, k)) => {
                    prop_assert!(!transitive);
                    prop_assert!(m[i][j] && m[j][k] && !m[i][k]);
                }
                Err(e) => prop_assert!(false, "unexpected {:?}", e),
            }
            Ok(())
        })
        .map_err(err)
}

fn prop_cli_determinism() -> Check {
    let strategy = prop_oneof![
        (1u64..=40).prop_map(|b| vec!["pointed".to_string(), "squareclasses".into(), "--bound".into(), b.to_string()]),
        (1u32..=6, 1u32..=6).prop_map(|(q, r)| vec!["fusion2".to_string(), "ffield".into(), "2".into(), q.to_string(), r.to_string()]),
        prop::sample::select(vec!["2", "3", "2,2", "4"]).prop_map(|g| {
            vec!["pointed".to_string(), "classes".into(), "--group".into(), g.into(), "--format".into(), "md".into()]
        }),
        (1u32..=6).prop_map(|d| vec!["twocat".to_string(), "family".into(), "--p".into(), "3".into(), "--depth".into(), d.to_string()]),
    ];
    runner()
        .run(&strategy, |args| {
            let argv: Vec<String> = std::iter::once("ss2cat".to_string()).chain(args).collect();
            let (a, b) = (ss2cat_cli::run(argv.clone()), ss2cat_cli::run(argv));
            prop_assert_eq!(a.code, 0);
            prop_assert_eq!(a, b);
            Ok(())
        })
        .map_err(err)
}

fn criterion_8() -> Check {
    for (name, suite) in [
        ("field axioms", prop_field_axioms as fn() -> Check),
        ("weak based tau condition", prop_tau_condition),
        ("idempotent completeness", prop_idempotent_completeness),
        ("skeleton Schur closure", prop_skeleton_schur_closure),
        ("CLI determinism", prop_cli_determinism),
    ] {
        suite().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 irreducible module counts, cap-doubling stable", criterion_1),
        ("2 ring hom counts, cap-doubling stable", criterion_2),
        ("3 pi0 tables and compact-not-finite family", criterion_3),
        ("4 module class counts and Klein H^2 oracle", criterion_4),
        ("5 DY dimensions and delta^2 = 0", criterion_5),
        ("6 fusion 2-category product tables", criterion_6),
        ("7 square class witnesses over Q", criterion_7),
        ("8 property suites", criterion_8),
    ];
    println!("acceptance: tolerance {TOLERANCE} (exact), {PROPERTY_CASES} cases per property suite");
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS criterion {name} ({secs:.2}s)"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s): {e}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
