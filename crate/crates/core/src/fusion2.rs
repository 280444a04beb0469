//! Products of simple objects in fusion 2-categories of module categories: over
//! braided `Vect(Z/p)`, over real vector spaces, and over finite prime fields.

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::arith::algebra::abelian_group_algebra;
use crate::arith::gf::{distinct_degree_counts, first_irreducible, lift_poly, Gf};
use crate::arith::{
    is_prime, split_commutative_algebra, AlgebraByStructureConstants, AlgebraError, ExactMatrix, FieldElem, FieldTag,
};
use crate::field_profile::{brauer_add, DivisionAlgebraClass, DivisionAlgebraLabel, FieldProfile};
use crate::pointed::{module_classes, BraidingParam, FiniteAbelianGroup, ModuleClass, PointedError};

/// Largest `p * q` and `p * r` accepted by [`finite_field_tensor`].
pub const MAX_FINITE_FIELD_SIZE: u64 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("prime {0} is outside the supported set {{2, 3, 5}}")]
    UnsupportedPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("product of basis elements {0} and {1} leaves degree {2}")]
    GradingViolation(usize, usize, usize),
    #[error("algebra validation failed: {0}")]
    ValidationFailed(#[from] AlgebraError),
    #[error("block identification failed: {0}")]
    IdentificationAmbiguous(String),
    #[error("unsupported class: {0}")]
    UnsupportedClass(String),
    #[error("p * max(q, r) = {0} exceeds the limit {1}")]
    SizeGuardExceeded(u64, u64),
    #[error("extension degrees must be positive")]
    ZeroDegree,
    #[error(transparent)]
    Pointed(#[from] PointedError),
}

/// An algebra graded by a finite abelian group; each basis vector is homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraObject {
    group: FiniteAbelianGroup,
    /// Degree of each basis vector, as a group element index.
    degrees: Vec<usize>,
    labels: Vec<String>,
    algebra: AlgebraByStructureConstants,
}

impl GradedAlgebraObject {
    pub fn new(
        group: FiniteAbelianGroup,
        degrees: Vec<usize>,
        labels: Vec<String>,
        algebra: AlgebraByStructureConstants,
    ) -> Result<Self, FusionError> {
        let d = algebra.dim();
        if degrees.len() != d || labels.len() != d {
            return Err(FusionError::GradingMismatch(format!("expected {d} degrees and labels")));
        }
        let order = group.order();
        if degrees.iter().any(|&g| g as u128 >= order) {
            return Err(FusionError::GradingMismatch("degree outside the group".into()));
        }
        algebra.check_associative()?;
        algebra.check_unit()?;
        for i in 0..d {
            for j in 0..d {
                let target = group.add(degrees[i], degrees[j]);
                if let Some(k) = (0..d).find(|&k| degrees[k] != target && !algebra.constant(i, j, k).is_zero()) {
                    return Err(FusionError::GradingViolation(i, j, k));
                }
            }
        }
        if algebra.unit().iter().zip(&degrees).any(|(u, &g)| g != 0 && !u.is_zero()) {
            return Err(FusionError::GradingMismatch("unit is not in degree 0".into()));
        }
        Ok(GradedAlgebraObject { group, degrees, labels, algebra })
    }

    /// The monoidal unit: the ground field in degree 0.
    pub fn unit_object(group: FiniteAbelianGroup, field: FieldTag) -> Self {
        let algebra = AlgebraByStructureConstants::new(field, 1, vec![field.one()], vec![field.one()]).expect("ground field");
        GradedAlgebraObject { group, degrees: vec![0], labels: vec!["1".into()], algebra }
    }

    /// Group algebra of `Z/p` with `e_g` in degree `g`.
    pub fn cyclic_group_algebra(p: u64, field: FieldTag) -> Result<Self, FusionError> {
        let group = FiniteAbelianGroup::new(vec![p])?;
        let algebra = abelian_group_algebra(field, &[p]);
        let labels = (0..p).map(|g| format!("e{g}")).collect();
        Ok(GradedAlgebraObject { group, degrees: (0..p as usize).collect(), labels, algebra })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn algebra(&self) -> &AlgebraByStructureConstants {
        &self.algebra
    }
}

/// Field used for `Z/p` braidings: `Q(zeta_p)`, or `Q(i)` when `p = 2`.
pub fn braiding_field(p: u64) -> FieldTag {
    FieldTag::Cyclotomic(if p == 2 { 4 } else { p as u32 })
}

/// `zeta_p^k` in [`braiding_field`].
fn root_of_unity(p: u64, k: u64) -> FieldElem {
    let field = braiding_field(p);
    let FieldTag::Cyclotomic(n) = field else { unreachable!() };
    field.zeta_power((u64::from(n) / p * (k % p)) as i64).expect("cyclotomic")
}

/// `A (x) B` with `(a_i (x) b_j)(a_k (x) b_l) = twist(j, k) a_i a_k (x) b_j b_l`, basis `i * dim B + j`.
fn twisted_tensor(
    a: &AlgebraByStructureConstants,
    b: &AlgebraByStructureConstants,
    twist: impl Fn(usize, usize) -> FieldElem,
) -> Result<AlgebraByStructureConstants, AlgebraError> {
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut mult = vec![field.zero(); d * d * d];
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    let t = twist(j, k);
                    let base = ((i * db + j) * d + k * db + l) * d;
                    for m in 0..da {
                        let x = a.constant(i, k, m);
                        if x.is_zero() {
                            continue;
                        }
                        for n in 0..db {
                            let y = b.constant(j, l, n);
                            if !y.is_zero() {
                                mult[base + m * db + n] = &mult[base + m * db + n] + &(&t * &(x * y));
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = (0..d).map(|x| a.unit()[x / db].clone() * &b.unit()[x % db]).collect();
    AlgebraByStructureConstants::new(field, d, mult, unit)
}

pub fn braided_tensor_algebra(
    p: u64,
    zeta: BraidingParam,
    a: &GradedAlgebraObject,
    b: &GradedAlgebraObject,
) -> Result<GradedAlgebraObject, FusionError> {
    let zp = FiniteAbelianGroup::new(vec![p]).map_err(|_| FusionError::NotPrime(p))?;
    if !is_prime(p) {
        return Err(FusionError::NotPrime(p));
    }
    if a.group != zp || b.group != zp || zeta.p != p || zeta.zeta_exponent >= p {
        return Err(FusionError::GradingMismatch(format!("both algebras and the braiding must be over Z/{p}")));
    }
    let field = braiding_field(p);
    if a.algebra.field() != field || b.algebra.field() != field {
        return Err(FusionError::GradingMismatch(format!("coefficients must lie in {field}")));
    }
    let twist = |j: usize, k: usize| {
        root_of_unity(p, zeta.zeta_exponent * b.degrees[j] as u64 * a.degrees[k] as u64)
    };
    let algebra = twisted_tensor(&a.algebra, &b.algebra, twist)?;
    let db = b.degrees.len();
    let degrees = (0..algebra.dim()).map(|x| (a.degrees[x / db] + b.degrees[x % db]) % p as usize).collect();
    let labels = (0..algebra.dim()).map(|x| format!("{}|{}", a.labels[x / db], b.labels[x % db])).collect();
    GradedAlgebraObject::new(zp, degrees, labels, algebra)
}

/// A multiset of simple summands, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fusion2Product<T> {
    pub summands: Vec<T>,
    /// Set when the computed answer departs from the closed-form rule usually quoted for this family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl<T: Ord + Clone> Fusion2Product<T> {
    fn new(mut summands: Vec<T>) -> Self {
        summands.sort();
        Fusion2Product { summands, note: None }
    }

    /// Distinct summands with multiplicities.
    pub fn multiplicities(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize)> = Vec::new();
        for s in &self.summands {
            match out.last_mut() {
                Some((t, c)) if t == s => *c += 1,
                _ => out.push((s.clone(), 1)),
            }
        }
        out
    }
}

/// `Vect(Z/p)` for the trivial subgroup, `Vect` for the full one.
pub fn cyclic_class_name(c: &ModuleClass, p: u64) -> String {
    match c.subgroup.order {
        1 => format!("Vect(Z/{p})"),
        n if n == p => "Vect".to_string(),
        _ => format!("M(H of order {}, class {})", c.subgroup.order, c.cocycle_class_index),
    }
}

/// Nonzero rows of the reduced echelon form of `vectors`.
fn span_basis(field: FieldTag, vectors: Vec<Vec<FieldElem>>) -> Vec<Vec<FieldElem>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = ExactMatrix::from_rows(field, vectors).expect("rectangular");
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|r| red.row(r).to_vec()).collect()
}

/// Block decomposition of a graded algebra along degree-0 central idempotents; returns
/// each block's `(support size, number of blocks of its degree-0 part, dimension)`.
fn graded_blocks(c: &GradedAlgebraObject) -> Result<Vec<(usize, usize, usize)>, FusionError> {
    let alg = &c.algebra;
    let field = alg.field();
    let d = alg.dim();
    let deg0: Vec<usize> = (0..d).filter(|&i| c.degrees[i] == 0).collect();
    let mut comm = ExactMatrix::zeros(field, d * d, deg0.len());
    for (col, &i) in deg0.iter().enumerate() {
        for j in 0..d {
            for k in 0..d {
                comm.set(j * d + k, col, alg.constant(i, j, k) - alg.constant(j, i, k));
            }
        }
    }
    let lift = |v: &[FieldElem]| -> Vec<FieldElem> {
        let mut full = vec![field.zero(); d];
        for (x, &i) in v.iter().zip(&deg0) {
            full[i] = x.clone();
        }
        full
    };
    let center0: Vec<Vec<FieldElem>> = comm.kernel_basis().iter().map(|v| lift(v)).collect();
    let z0 = alg.subalgebra(&center0)?;
    let mut out = Vec::new();
    for block in split_commutative_algebra(&z0)? {
        let mut e = vec![field.zero(); d];
        for (coef, v) in block.idempotent.iter().zip(&center0) {
            for (slot, x) in e.iter_mut().zip(v) {
                *slot = &*slot + &(coef * x);
            }
        }
        let images: Vec<Vec<FieldElem>> = (0..d).map(|i| alg.mul(&e, &alg.basis_vector(i))).collect();
        let mut support: Vec<usize> =
            (0..d).filter(|&i| images[i].iter().any(|x| !x.is_zero())).map(|i| c.degrees[i]).collect();
        support.sort_unstable();
        support.dedup();
        let dim = span_basis(field, images.clone()).len();
        let part0 = span_basis(field, deg0.iter().map(|&i| images[i].clone()).collect());
        let a0 = corner_algebra(alg, &part0, &e)?;
        if !a0.is_commutative() {
            return Err(FusionError::IdentificationAmbiguous("degree-0 part of a block is not commutative".into()));
        }
        out.push((support.len(), split_commutative_algebra(&a0)?.len(), dim));
    }
    Ok(out)
}

/// Structure constants of the span of `basis`, a subalgebra with unit `e`.
fn corner_algebra(
    alg: &AlgebraByStructureConstants,
    basis: &[Vec<FieldElem>],
    e: &[FieldElem],
) -> Result<AlgebraByStructureConstants, AlgebraError> {
    let n = basis.len();
    let mut mult = Vec::with_capacity(n * n * n);
    for x in basis {
        for y in basis {
            let c = AlgebraByStructureConstants::coordinates(basis, &alg.mul(x, y)).ok_or(AlgebraError::NotSubalgebra)?;
            mult.extend(c);
        }
    }
    let unit = AlgebraByStructureConstants::coordinates(basis, e).ok_or(AlgebraError::NotSubalgebra)?;
    AlgebraByStructureConstants::new(alg.field(), n, mult, unit)
}

fn realize(class: &ModuleClass, p: u64) -> Result<GradedAlgebraObject, FusionError> {
    let field = braiding_field(p);
    match class.subgroup.order {
        1 => Ok(GradedAlgebraObject::unit_object(FiniteAbelianGroup::new(vec![p])?, field)),
        n if n == p => GradedAlgebraObject::cyclic_group_algebra(p, field),
        _ => Err(FusionError::UnsupportedClass(format!("{class:?}"))),
    }
}

/// `A (x)_C B` for module categories `A`, `B` over `C = Vect(Z/p)` with the braiding `zeta`.
pub fn pointed_braided_product(
    p: u64,
    zeta: BraidingParam,
    a: &ModuleClass,
    b: &ModuleClass,
) -> Result<Fusion2Product<ModuleClass>, FusionError> {
    if ![2, 3, 5].contains(&p) {
        return Err(FusionError::UnsupportedPrime(p));
    }
    let classes = module_classes(&FiniteAbelianGroup::new(vec![p])?, &FieldProfile::alg_closed(0).expect("char 0"))?;
    let of_order = |n: u64| classes.iter().find(|c| c.subgroup.order == n).cloned().expect("both subgroups occur");
    let c = braided_tensor_algebra(p, zeta, &realize(a, p)?, &realize(b, p)?)?;
    let p_us = p as usize;
    let summands = graded_blocks(&c)?
        .into_iter()
        .map(|(support, simples, dim)| match (support, simples) {
            (1, 1) => Ok(of_order(1)),
            (s, n) if s == p_us && n == p_us => Ok(of_order(1)),
            (s, 1) if s == p_us => Ok(of_order(p)),
            _ => Err(FusionError::IdentificationAmbiguous(format!(
                "block of dimension {dim} with support {support} and {simples} simple modules"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Fusion2Product::new(summands))
}

/// `Q`-form of `R`, `C` or `H` on the basis `1, i, j, k`.
fn real_division_algebra(label: DivisionAlgebraLabel) -> Result<AlgebraByStructureConstants, FusionError> {
    let q = FieldTag::Rational;
    // table[x][y] = (sign, index) of the product of basis elements x and y
    let quaternion: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let d = match label {
        DivisionAlgebraLabel::Base => 1,
        DivisionAlgebraLabel::Complexification => 2,
        DivisionAlgebraLabel::Quaternion => 4,
        DivisionAlgebraLabel::FiniteExt(_) => return Err(FusionError::UnsupportedClass(label.to_string())),
    };
    let mut mult = vec![q.zero(); d * d * d];
    for x in 0..d {
        for y in 0..d {
            let (s, z) = quaternion[x][y];
            mult[(x * d + y) * d + z] = q.from_i64(s);
        }
    }
    let mut unit = vec![q.zero(); d];
    unit[0] = q.one();
    Ok(AlgebraByStructureConstants::new(q, d, mult, unit)?)
}

/// `(positive, negative)` inertia of a symmetric rational matrix.
fn rational_signature(mut a: Vec<Vec<FieldElem>>) -> (usize, usize) {
    let n = a.len();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                for c in 0..n {
                    a[k][c] = &a[k][c] + &a[j][c];
                }
                for row in a.iter_mut() {
                    row[k] = &row[k] + &row[j];
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.as_rational().expect("rational").is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = pivot.inv().expect("nonzero");
        for i in k + 1..n {
            let f = &a[i][k] * &inv;
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                a[i][c] = &a[i][c] - &(&f * &a[k][c]);
            }
            for row in a.iter_mut() {
                row[i] = &row[i] - &(&f * &row[k]);
            }
        }
    }
    (pos, neg)
}

/// A simple summand of a real algebra: `M_m(D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RealBlock {
    pub class: DivisionAlgebraClass,
    pub matrix_size: u32,
}

/// Wedderburn decomposition of `D (x)_R E` for `D, E` among `R`, `C`, `H`.
pub fn real_division_blocks(d: DivisionAlgebraClass, e: DivisionAlgebraClass) -> Result<Vec<RealBlock>, FusionError> {
    let t = twisted_tensor(&real_division_algebra(d.label)?, &real_division_algebra(e.label)?, |_, _| {
        FieldTag::Rational.one()
    })?;
    let q = FieldTag::Rational;
    let center = t.center_basis();
    let z = t.subalgebra(&center)?;
    let mut out = Vec::new();
    for block in split_commutative_algebra(&z)? {
        let ez = span_basis(q, (0..z.dim()).map(|i| z.mul(&block.idempotent, &z.basis_vector(i))).collect());
        let gram: Vec<Vec<FieldElem>> =
            ez.iter().map(|x| ez.iter().map(|y| z.trace(&z.mul(x, y))).collect()).collect();
        let (pos, neg) = rational_signature(gram);
        let zb = block.dim;
        // Signature of the trace form counts real embeddings of the centre.
        let real_places = pos - neg;
        let complex_places = (zb - real_places) / 2;
        let mut e_t = vec![q.zero(); t.dim()];
        for (coef, v) in block.idempotent.iter().zip(&center) {
            for (slot, x) in e_t.iter_mut().zip(v) {
                *slot = &*slot + &(coef * x);
            }
        }
        let dt = span_basis(q, (0..t.dim()).map(|i| t.mul(&e_t, &t.basis_vector(i))).collect()).len();
        let rank_over_center = (dt / zb) as u32;
        let square_root = |n: u32| -> Result<u32, FusionError> {
            let m = (f64::from(n).sqrt().round()) as u32;
            if m * m == n {
                Ok(m)
            } else {
                Err(FusionError::IdentificationAmbiguous(format!("block of rank {n} over its centre is not a matrix algebra")))
            }
        };
        if real_places > 0 {
            let class = brauer_add(&FieldProfile::real_closed(), d.label, e.label)
                .map_err(|err| FusionError::IdentificationAmbiguous(err.to_string()))?;
            let m = square_root(rank_over_center / class.dim_over_base)?;
            out.extend(std::iter::repeat(RealBlock { class, matrix_size: m }).take(real_places));
        }
        if complex_places > 0 {
            let class = DivisionAlgebraClass::of(DivisionAlgebraLabel::Complexification);
            let m = square_root(rank_over_center)?;
            out.extend(std::iter::repeat(RealBlock { class, matrix_size: m }).take(complex_places));
        }
    }
    out.sort();
    Ok(out)
}

/// `Vect_D (x)_{Vect_R} Vect_E` up to Morita equivalence.
pub fn real_division_tensor(
    d: DivisionAlgebraClass,
    e: DivisionAlgebraClass,
) -> Result<Fusion2Product<DivisionAlgebraClass>, FusionError> {
    Ok(Fusion2Product::new(real_division_blocks(d, e)?.into_iter().map(|b| b.class).collect()))
}

/// `Vect_{F_{p^q}} (x)_{Vect_{F_p}} Vect_{F_{p^r}}`: one summand per irreducible factor over
/// `F_{p^q}` of a degree-`r` irreducible over `F_p`.
pub fn finite_field_tensor(p: u64, q: u32, r: u32) -> Result<Fusion2Product<DivisionAlgebraClass>, FusionError> {
    if !is_prime(p) {
        return Err(FusionError::NotPrime(p));
    }
    if q == 0 || r == 0 {
        return Err(FusionError::ZeroDegree);
    }
    let size = p.saturating_mul(u64::from(q.max(r)));
    if size > MAX_FINITE_FIELD_SIZE {
        return Err(FusionError::SizeGuardExceeded(size, MAX_FINITE_FIELD_SIZE));
    }
    let k = Gf::new(p, q);
    let f = lift_poly(&k, &first_irreducible(p, r));
    let mut summands = Vec::new();
    for (deg, count) in distinct_degree_counts(&k, &f) {
        let class = DivisionAlgebraClass::of(DivisionAlgebraLabel::FiniteExt(q * deg as u32));
        summands.extend(std::iter::repeat(class).take(count));
    }
    let mut out = Fusion2Product::new(summands);
    let (lo, hi) = (q.min(r), q.max(r));
    if hi % lo != 0 {
        let g = num_integer::gcd(q, r);
        out.note = Some(format!(
            "{lo} does not divide {hi}: the product is {g} x F_{p}^{}, not {lo} x F_{p}^{hi}",
            num_integer::lcm(q, r)
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;
    use DivisionAlgebraLabel::*;

    fn classes(p: u64) -> (ModuleClass, ModuleClass) {
        let all = module_classes(&FiniteAbelianGroup::new(vec![p]).unwrap(), &FieldProfile::alg_closed(0).unwrap()).unwrap();
        (all[0].clone(), all[1].clone())
    }

    fn names(prod: &Fusion2Product<ModuleClass>, p: u64) -> Vec<String> {
        prod.summands.iter().map(|c| cyclic_class_name(c, p)).collect()
    }

    #[test]
    fn braided_tensor_examples() {
        for p in [2, 3] {
            let f = braiding_field(p);
            let a = GradedAlgebraObject::cyclic_group_algebra(p, f).unwrap();
            let plain = braided_tensor_algebra(p, BraidingParam { p, zeta_exponent: 0 }, &a, &a).unwrap();
            let pu = p as usize;
            for x in 0..pu * pu {
                for y in 0..pu * pu {
                    let z = ((x / pu + y / pu) % pu) * pu + (x % pu + y % pu) % pu;
                    assert!(plain.algebra().constant(x, y, z).is_one());
                }
            }
            let twisted = braided_tensor_algebra(p, BraidingParam { p, zeta_exponent: 1 }, &a, &a).unwrap();
            assert_eq!(twisted.algebra().dim(), pu * pu);
            assert_eq!(twisted.algebra().center_basis().len(), 1);
        }
        let f = braiding_field(2);
        let a = GradedAlgebraObject::cyclic_group_algebra(2, f).unwrap();
        let t = braided_tensor_algebra(2, BraidingParam { p: 2, zeta_exponent: 1 }, &a, &a).unwrap();
        // u = e1|e0, v = e0|e1: vu = -uv.
        let (u, v) = (t.algebra().basis_vector(2), t.algebra().basis_vector(1));
        let uv = t.algebra().mul(&u, &v);
        let vu = t.algebra().mul(&v, &u);
        assert!(uv.iter().zip(&vu).all(|(x, y)| (x + y).is_zero()));
    }

    #[test]
    fn grading_checks() {
        let f = braiding_field(3);
        let a = GradedAlgebraObject::cyclic_group_algebra(3, f).unwrap();
        let bad = GradedAlgebraObject::new(a.group().clone(), vec![0, 1, 1], a.labels().to_vec(), a.algebra().clone());
        assert!(matches!(bad, Err(FusionError::GradingViolation(..))));
        let b = GradedAlgebraObject::cyclic_group_algebra(2, braiding_field(2)).unwrap();
        assert!(braided_tensor_algebra(3, BraidingParam { p: 3, zeta_exponent: 1 }, &a, &b).is_err());
    }

    #[test]
    fn pointed_products() {
        for p in [2, 3, 5] {
            let (reg, vect) = classes(p);
            let triv = BraidingParam { p, zeta_exponent: 0 };
            let prim = BraidingParam { p, zeta_exponent: 1 };
            assert_eq!(names(&pointed_braided_product(p, triv, &vect, &vect).unwrap(), p), vec!["Vect"; p as usize]);
            assert_eq!(names(&pointed_braided_product(p, prim, &vect, &vect).unwrap(), p), vec![format!("Vect(Z/{p})")]);
            for zeta in [triv, prim] {
                for x in [&reg, &vect] {
                    assert_eq!(pointed_braided_product(p, zeta, &reg, x).unwrap().summands, vec![x.clone()]);
                    assert_eq!(pointed_braided_product(p, zeta, x, &reg).unwrap().summands, vec![x.clone()]);
                }
            }
        }
        let (reg, _) = classes(7);
        assert_eq!(
            pointed_braided_product(7, BraidingParam { p: 7, zeta_exponent: 0 }, &reg, &reg),
            Err(FusionError::UnsupportedPrime(7))
        );
    }

    fn class(l: DivisionAlgebraLabel) -> DivisionAlgebraClass {
        DivisionAlgebraClass::of(l)
    }

    #[test]
    fn real_table() {
        let prod = |a, b| real_division_tensor(class(a), class(b)).unwrap().summands;
        assert_eq!(prod(Complexification, Complexification), vec![class(Complexification); 2]);
        assert_eq!(prod(Complexification, Quaternion), vec![class(Complexification)]);
        assert_eq!(prod(Quaternion, Quaternion), vec![class(Base)]);
        for x in [Base, Complexification, Quaternion] {
            assert_eq!(prod(Base, x), vec![class(x)]);
            assert_eq!(prod(x, Base), vec![class(x)]);
            for y in [Base, Complexification, Quaternion] {
                let blocks = real_division_blocks(class(x), class(y)).unwrap();
                let total: u32 = blocks.iter().map(|b| b.matrix_size.pow(2) * b.class.dim_over_base).sum();
                assert_eq!(total, class(x).dim_over_base * class(y).dim_over_base);
            }
        }
        assert_eq!(
            real_division_blocks(class(Quaternion), class(Quaternion)).unwrap(),
            vec![RealBlock { class: class(Base), matrix_size: 4 }]
        );
    }

    #[test]
    fn signature() {
        let q = FieldTag::Rational;
        let m = |rows: &[[i64; 2]]| rows.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect();
        assert_eq!(rational_signature(m(&[[0, 1], [1, 0]])), (1, 1));
        assert_eq!(rational_signature(m(&[[2, 0], [0, -2]])), (1, 1));
        assert_eq!(rational_signature(m(&[[1, 1], [1, 1]])), (1, 0));
    }

    /// Block dimensions of `F_{p^q} (x) F_{p^r}` as a commutative `F_p`-algebra.
    fn split_oracle(p: u64, q: u32, r: u32) -> Vec<usize> {
        let f = FieldTag::prime(p).unwrap();
        let field_alg = |n: u32| {
            let g = Poly::new(f, first_irreducible(p, n).iter().map(|&c| f.from_i64(c as i64)).collect());
            let d = n as usize;
            let mut mult = vec![f.zero(); d * d * d];
            for i in 0..d {
                for j in 0..d {
                    let mut coeffs = vec![f.zero(); i + j + 1];
                    coeffs[i + j] = f.one();
                    let red = Poly::new(f, coeffs).rem(&g);
                    for (k, c) in red.coeffs().iter().enumerate() {
                        mult[(i * d + j) * d + k] = c.clone();
                    }
                }
            }
            let mut unit = vec![f.zero(); d];
            unit[0] = f.one();
            AlgebraByStructureConstants::new(f, d, mult, unit).unwrap()
        };
        let t = twisted_tensor(&field_alg(q), &field_alg(r), |_, _| f.one()).unwrap();
        let mut dims: Vec<usize> = split_commutative_algebra(&t).unwrap().iter().map(|b| b.dim).collect();
        dims.sort_unstable();
        dims
    }

    #[test]
    fn finite_field_examples() {
        let ext = |q| class(FiniteExt(q));
        assert_eq!(finite_field_tensor(2, 2, 2).unwrap().summands, vec![ext(2); 2]);
        let r_divides_q = finite_field_tensor(2, 4, 2).unwrap();
        assert_eq!((r_divides_q.summands, r_divides_q.note), (vec![ext(4); 2], None));
        let coprime = finite_field_tensor(2, 3, 2).unwrap();
        assert_eq!(coprime.summands, vec![ext(6)]);
        assert!(coprime.note.is_some());
        assert_eq!(finite_field_tensor(3, 1, 5).unwrap().summands, vec![ext(5)]);
        assert!(matches!(finite_field_tensor(2, 33, 1), Err(FusionError::SizeGuardExceeded(..))));
        for (p, q, r) in [(2, 2, 2), (2, 3, 2), (2, 4, 2), (2, 4, 6), (3, 2, 2), (3, 2, 3), (5, 1, 2)] {
            let dims: Vec<usize> =
                finite_field_tensor(p, q, r).unwrap().summands.iter().map(|c| c.dim_over_base as usize).collect();
            let g = num_integer::gcd(q, r) as usize;
            let oracle = split_oracle(p, q, r);
            assert_eq!(oracle.len(), g, "{p} {q} {r}");
            assert!(oracle.iter().zip(&dims).all(|(&o, &d)| o == d));
        }
    }
}
