//! Finite-dimensional algebras given by structure constants, and the splitting of
//! commutative ones into primitive idempotents.

use serde::Serialize;
use thiserror::Error;

use super::cyclotomic::euler_phi;
use super::factor::factor_rational;
use super::{ExactMatrix, FieldElem, FieldTag, Poly, SparseEchelon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("entry in field {found} but algebra is over {expected}")]
    FieldMismatch { expected: FieldTag, found: FieldTag },
    #[error("multiplication is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector is not a two-sided unit (fails on basis element {0})")]
    NoUnit(usize),
    #[error("algebra is not commutative (e_{0} e_{1} != e_{1} e_{0})")]
    NotCommutative(usize, usize),
    #[error("vectors do not span a unital subalgebra")]
    NotSubalgebra,
    #[error("splitting did not terminate within {0} candidate elements")]
    SplitBudget(usize),
}

/// `e_i e_j = sum_k c_{ij}^k e_k` with constants stored at `(i * dim + j) * dim + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraByStructureConstants {
    field: FieldTag,
    dim: usize,
    mult: Vec<FieldElem>,
    unit: Vec<FieldElem>,
}

/// One primitive idempotent of a commutative algebra and the dimension of its block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub dim: usize,
    pub idempotent: Vec<FieldElem>,
}

impl AlgebraByStructureConstants {
    /// Build and validate (shape, field, associativity, two-sided unit).
    pub fn new(field: FieldTag, dim: usize, mult: Vec<FieldElem>, unit: Vec<FieldElem>) -> Result<Self, AlgebraError> {
        let a = Self::new_unchecked(field, dim, mult, unit)?;
        a.check_associative()?;
        a.check_unit()?;
        Ok(a)
    }

    /// Shape and field checks only; associativity and unit are trusted.
    pub(crate) fn new_unchecked(
        field: FieldTag,
        dim: usize,
        mult: Vec<FieldElem>,
        unit: Vec<FieldElem>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::Shape("dimension must be positive".into()));
        }
        if mult.len() != dim * dim * dim {
            return Err(AlgebraError::Shape(format!("expected {} structure constants, got {}", dim * dim * dim, mult.len())));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!("unit vector has length {}, expected {dim}", unit.len())));
        }
        if let Some(bad) = mult.iter().chain(&unit).find(|c| c.tag() != field) {
            return Err(AlgebraError::FieldMismatch { expected: field, found: bad.tag() });
        }
        Ok(AlgebraByStructureConstants { field, dim, mult, unit })
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[FieldElem] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &FieldElem {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[FieldElem], y: &[FieldElem]) -> Vec<FieldElem> {
        let d = self.dim;
        let mut out = vec![self.field.zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let base = (i * d + j) * d;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.mult[base + k];
                    if !c.is_zero() {
                        *o = &*o + &(&s * c);
                    }
                }
            }
        }
        out
    }

    pub fn check_associative(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        let prods: Vec<Vec<FieldElem>> = (0..d * d).map(|ij| self.mult[ij * d..(ij + 1) * d].to_vec()).collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul(&prods[i * d + j], &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &prods[j * d + k]);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_unit(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::NoUnit(i));
            }
        }
        Ok(())
    }

    pub fn commutativity_violation(&self) -> Option<(usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                if (0..d).any(|k| self.constant(i, j, k) != self.constant(j, i, k)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_violation().is_none()
    }

    /// Matrix of left multiplication by `x`; column `j` is `x e_j`.
    pub fn left_mult_matrix(&self, x: &[FieldElem]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(x, &self.basis_vector(j));
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, j, v);
            }
        }
        m
    }

    /// Trace of left multiplication: `Tr(L_x) = sum_j x_j sum_i c_{ji}^i`.
    pub fn trace(&self, x: &[FieldElem]) -> FieldElem {
        let mut acc = self.field.zero();
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                let c = self.constant(j, i, i);
                if !c.is_zero() {
                    acc = acc + xj * c;
                }
            }
        }
        acc
    }

    /// Basis of the center, as the kernel of `x -> (x e_j - e_j x)_j`.
    pub fn center_basis(&self) -> Vec<Vec<FieldElem>> {
        let d = self.dim;
        let mut m = ExactMatrix::zeros(self.field, d * d, d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.constant(i, j, k) - self.constant(j, i, k);
                    m.set(j * d + k, i, v);
                }
            }
        }
        m.kernel_basis()
    }

    /// Coordinates of `v` in the span of `basis`, if it lies there.
    pub fn coordinates(basis: &[Vec<FieldElem>], v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let field = v.first().map(FieldElem::tag)?;
        let n = basis.len();
        let rows: Vec<Vec<FieldElem>> = (0..v.len())
            .map(|r| {
                let mut row: Vec<FieldElem> = basis.iter().map(|b| b[r].clone()).collect();
                row.push(v[r].clone());
                row
            })
            .collect();
        let aug = ExactMatrix::from_rows(field, rows).ok()?;
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut coords = vec![field.zero(); n];
        for (i, &pc) in pivots.iter().enumerate() {
            coords[pc] = red.get(i, n).clone();
        }
        Some(coords)
    }

    /// Structure constants of the subalgebra spanned by linearly independent `basis`.
    pub fn subalgebra(&self, basis: &[Vec<FieldElem>]) -> Result<AlgebraByStructureConstants, AlgebraError> {
        let n = basis.len();
        let mut mult = Vec::with_capacity(n * n * n);
        for x in basis {
            for y in basis {
                let c = Self::coordinates(basis, &self.mul(x, y)).ok_or(AlgebraError::NotSubalgebra)?;
                mult.extend(c);
            }
        }
        let unit = Self::coordinates(basis, &self.unit).ok_or(AlgebraError::NotSubalgebra)?;
        Self::new_unchecked(self.field, n, mult, unit)
    }

    /// Same ring viewed over `Q`: basis `zeta^a e_i` at index `i * phi(n) + a`.
    pub fn restrict_to_rationals(&self) -> AlgebraByStructureConstants {
        let FieldTag::Cyclotomic(n) = self.field else { return self.clone() };
        let phi = euler_phi(n);
        let q = FieldTag::Rational;
        let d = self.dim;
        let big = d * phi;
        let mut mult = vec![q.zero(); big * big * big];
        for i in 0..d {
            for a in 0..phi {
                for j in 0..d {
                    for b in 0..phi {
                        let z = self.field.zeta_power((a + b) as i64).unwrap();
                        let row = (i * phi + a) * big + (j * phi + b);
                        for k in 0..d {
                            let c = self.constant(i, j, k);
                            if c.is_zero() {
                                continue;
                            }
                            for (cc, v) in (&z * c).prime_field_coords().into_iter().enumerate() {
                                mult[row * big + k * phi + cc] = v;
                            }
                        }
                    }
                }
            }
        }
        let unit = self.unit.iter().flat_map(FieldElem::prime_field_coords).collect();
        AlgebraByStructureConstants { field: q, dim: big, mult, unit }
    }

    /// Evaluate `poly` at `a` inside the block with identity `e`.
    fn eval_in_block(&self, poly: &Poly, a: &[FieldElem], e: &[FieldElem]) -> Vec<FieldElem> {
        let mut acc = vec![self.field.zero(); self.dim];
        for c in poly.coeffs().iter().rev() {
            acc = self.mul(&acc, a);
            for (x, ei) in acc.iter_mut().zip(e) {
                *x = &*x + &(c * ei);
            }
        }
        acc
    }

    /// Minimal polynomial of `a` in the block with identity `e` (powers start at `a^0 = e`).
    pub(crate) fn min_poly_in_block(&self, a: &[FieldElem], e: &[FieldElem]) -> Poly {
        let mut powers: Vec<Vec<FieldElem>> = Vec::new();
        let mut ech = SparseEchelon::new(self.field);
        let mut cur = e.to_vec();
        loop {
            let sparse = sparse_of(&cur);
            if !ech.insert(sparse) {
                powers.push(cur);
                break;
            }
            let next = self.mul(&cur, a);
            powers.push(cur);
            cur = next;
        }
        // One-dimensional kernel of [e, a, ..., a^k]; scale so the top coefficient is 1.
        let rows: Vec<Vec<FieldElem>> = (0..self.dim).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect();
        let m = ExactMatrix::from_rows(self.field, rows).unwrap();
        let ker = m.kernel_basis();
        debug_assert_eq!(ker.len(), 1);
        Poly::new(self.field, ker[0].clone()).monic()
    }

    /// Split the block `e` along the coprime prime-power factors of the minimal
    /// polynomial `m` of `a`. Returns `None` when `m` is a single prime power.
    fn crt_split(&self, a: &[FieldElem], e: &[FieldElem], m: &Poly, factors: &[(Poly, usize)]) -> Option<Vec<Vec<FieldElem>>> {
        if factors.len() < 2 {
            return None;
        }
        let parts = factors
            .iter()
            .map(|(f, k)| {
                let pk = f.pow(*k as u64);
                let g = m.divrem(&pk).0;
                let (_, s, _) = g.xgcd(&pk);
                let u = s.mul(&g).rem(m);
                self.eval_in_block(&u, a, e)
            })
            .collect();
        Some(parts)
    }

    fn block_rank(&self, e: &[FieldElem]) -> usize {
        self.left_mult_matrix(e).rank()
    }

    /// Dimension of the nilradical of the block `e` (characteristic zero only),
    /// via the kernel of the trace form on `eA`.
    fn block_radical_dim(&self, e: &[FieldElem]) -> usize {
        let mut ech = SparseEchelon::new(self.field);
        let mut span = Vec::new();
        for j in 0..self.dim {
            let v = self.mul(e, &self.basis_vector(j));
            if ech.insert(sparse_of(&v)) {
                span.push(v);
            }
        }
        let n = span.len();
        let mut form = ExactMatrix::zeros(self.field, n, n);
        for a in 0..n {
            for b in a..n {
                let t = self.trace(&self.mul(&span[a], &span[b]));
                form.set(a, b, t.clone());
                form.set(b, a, t);
            }
        }
        n - form.rank()
    }
}

fn sparse_of(v: &[FieldElem]) -> Vec<(usize, FieldElem)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Extra generic elements tried after the basis when splitting over `Q`.
const MOMENT_CANDIDATES: usize = 64;

/// Primitive idempotents of a commutative algebra, with block dimensions over the
/// algebra's own field, sorted lexicographically by idempotent vector.
pub fn split_commutative_algebra(alg: &AlgebraByStructureConstants) -> Result<Vec<Block>, AlgebraError> {
    alg.check_associative()?;
    alg.check_unit()?;
    if let Some((i, j)) = alg.commutativity_violation() {
        return Err(AlgebraError::NotCommutative(i, j));
    }
    let idempotents = match alg.field {
        FieldTag::Prime(p) => split_over_prime(alg, p),
        FieldTag::Rational => split_over_rationals(alg)?,
        FieldTag::Cyclotomic(n) => {
            let phi = euler_phi(n);
            let over_q = alg.restrict_to_rationals();
            split_over_rationals(&over_q)?
                .into_iter()
                .map(|v| {
                    (0..alg.dim)
                        .map(|i| {
                            (0..phi).fold(alg.field.zero(), |acc, a| {
                                let c = alg.field.from_rational(&v[i * phi + a].as_rational().unwrap()).unwrap();
                                acc + c * alg.field.zeta_power(a as i64).unwrap()
                            })
                        })
                        .collect()
                })
                .collect()
        }
    };
    let mut blocks: Vec<Block> =
        idempotents.into_iter().map(|e| Block { dim: alg.block_rank(&e), idempotent: e }).collect();
    blocks.sort_by(|x, y| x.idempotent.cmp(&y.idempotent));
    Ok(blocks)
}

/// Berlekamp-style splitting: the Frobenius-fixed subalgebra has one dimension per block.
fn split_over_prime(alg: &AlgebraByStructureConstants, p: u64) -> Vec<Vec<FieldElem>> {
    let d = alg.dim;
    let field = alg.field;
    let pow = |x: &[FieldElem]| -> Vec<FieldElem> {
        let mut base = x.to_vec();
        let mut acc = alg.unit.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = alg.mul(&acc, &base);
            }
            base = alg.mul(&base, &base);
            e >>= 1;
        }
        acc
    };
    let mut frob = ExactMatrix::zeros(field, d, d);
    for j in 0..d {
        let col = pow(&alg.basis_vector(j));
        for (r, v) in col.into_iter().enumerate() {
            let v = if r == j { v - field.one() } else { v };
            frob.set(r, j, v);
        }
    }
    let fixed = frob.kernel_basis();
    let target = fixed.len();
    let mut blocks = vec![alg.unit.clone()];
    for s in &fixed {
        if blocks.len() == target {
            break;
        }
        let mut next = Vec::new();
        for e in blocks {
            let a = alg.mul(&e, s);
            let m = alg.min_poly_in_block(&a, &e);
            let roots = super::factor::split_linear_roots(&m);
            let factors: Vec<(Poly, usize)> = roots.iter().map(|&r| (Poly::linear(&field.from_i64(r as i64)), 1)).collect();
            match alg.crt_split(&a, &e, &m, &factors) {
                Some(parts) => next.extend(parts),
                None => next.push(e),
            }
        }
        blocks = next;
    }
    debug_assert_eq!(blocks.len(), target);
    blocks
}

fn split_over_rationals(alg: &AlgebraByStructureConstants) -> Result<Vec<Vec<FieldElem>>, AlgebraError> {
    let d = alg.dim;
    let field = alg.field;
    let moment = |t: usize| -> Vec<FieldElem> {
        let t = field.from_i64(t as i64);
        let mut acc = field.one();
        (0..d)
            .map(|_| {
                let v = acc.clone();
                acc = &acc * &t;
                v
            })
            .collect()
    };
    let candidates = (0..d).map(|i| alg.basis_vector(i)).chain((1..=MOMENT_CANDIDATES).map(moment));
    // (idempotent, certified primitive)
    let mut blocks: Vec<(Vec<FieldElem>, bool)> = vec![(alg.unit.clone(), false)];
    for c in candidates {
        if blocks.iter().all(|b| b.1) {
            return Ok(blocks.into_iter().map(|b| b.0).collect());
        }
        let mut next = Vec::new();
        for (e, done) in blocks {
            if done {
                next.push((e, true));
                continue;
            }
            let a = alg.mul(&e, &c);
            let m = alg.min_poly_in_block(&a, &e);
            let factors = factor_rational(&m);
            if let Some(parts) = alg.crt_split(&a, &e, &m, &factors) {
                next.extend(parts.into_iter().map(|u| (u, false)));
                continue;
            }
            let residue_dim = alg.block_rank(&e) - alg.block_radical_dim(&e);
            let certified = factors[0].0.degree() == Some(residue_dim);
            next.push((e, certified));
        }
        blocks = next;
    }
    if blocks.iter().all(|b| b.1) {
        Ok(blocks.into_iter().map(|b| b.0).collect())
    } else {
        Err(AlgebraError::SplitBudget(d + MOMENT_CANDIDATES))
    }
}

/// Group algebra of `Z/n_1 x ... x Z/n_r`; basis indexed in mixed radix, first factor fastest.
pub fn abelian_group_algebra(field: FieldTag, moduli: &[u64]) -> AlgebraByStructureConstants {
    let d: usize = moduli.iter().map(|&m| m as usize).product();
    let digits = |mut x: usize| -> Vec<usize> {
        moduli
            .iter()
            .map(|&m| {
                let r = x % m as usize;
                x /= m as usize;
                r
            })
            .collect()
    };
    let index = |ds: &[usize]| -> usize {
        ds.iter().zip(moduli).rev().fold(0, |acc, (&v, &m)| acc * m as usize + v)
    };
    let mut mult = vec![field.zero(); d * d * d];
    for i in 0..d {
        let di = digits(i);
        for j in 0..d {
            let dj = digits(j);
            let sum: Vec<usize> = di.iter().zip(&dj).zip(moduli).map(|((a, b), &m)| (a + b) % m as usize).collect();
            mult[(i * d + j) * d + index(&sum)] = field.one();
        }
    }
    let mut unit = vec![field.zero(); d];
    unit[0] = field.one();
    AlgebraByStructureConstants { field, dim: d, mult, unit }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(blocks: &[Block]) -> Vec<usize> {
        let mut v: Vec<usize> = blocks.iter().map(|b| b.dim).collect();
        v.sort_unstable();
        v
    }

    fn check_complete(alg: &AlgebraByStructureConstants, blocks: &[Block]) {
        let mut sum = vec![alg.field().zero(); alg.dim()];
        for (i, b) in blocks.iter().enumerate() {
            assert_eq!(alg.mul(&b.idempotent, &b.idempotent), b.idempotent);
            for c in &blocks[i + 1..] {
                assert!(alg.mul(&b.idempotent, &c.idempotent).iter().all(FieldElem::is_zero));
            }
            for (s, x) in sum.iter_mut().zip(&b.idempotent) {
                *s = &*s + x;
            }
        }
        assert_eq!(sum, alg.unit());
        assert_eq!(blocks.iter().map(|b| b.dim).sum::<usize>(), alg.dim());
    }

    #[test]
    fn z3_over_cyclotomic_three() {
        let alg = abelian_group_algebra(FieldTag::Cyclotomic(3), &[3]);
        let blocks = split_commutative_algebra(&alg).unwrap();
        assert_eq!(dims(&blocks), vec![1, 1, 1]);
        check_complete(&alg, &blocks);
        // Fourier idempotent (1/3)(1 + g + g^2) is among them.
        let third = FieldTag::Cyclotomic(3).from_rational(&num_rational::BigRational::new(1.into(), 3.into())).unwrap();
        assert!(blocks.iter().any(|b| b.idempotent == vec![third.clone(), third.clone(), third.clone()]));
    }

    #[test]
    fn z3_over_rationals() {
        let alg = abelian_group_algebra(FieldTag::Rational, &[3]);
        let blocks = split_commutative_algebra(&alg).unwrap();
        assert_eq!(dims(&blocks), vec![1, 2]);
        check_complete(&alg, &blocks);
    }

    #[test]
    fn zp_over_fp_is_local() {
        for p in [2u64, 3, 5, 7] {
            let alg = abelian_group_algebra(FieldTag::Prime(p), &[p]);
            let blocks = split_commutative_algebra(&alg).unwrap();
            assert_eq!(dims(&blocks), vec![p as usize]);
        }
    }

    #[test]
    fn klein_over_f3_and_z4_over_f5() {
        let alg = abelian_group_algebra(FieldTag::Prime(3), &[2, 2]);
        let blocks = split_commutative_algebra(&alg).unwrap();
        assert_eq!(dims(&blocks), vec![1, 1, 1, 1]);
        check_complete(&alg, &blocks);
        // Z/4 over F_3: x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
        let alg = abelian_group_algebra(FieldTag::Prime(3), &[4]);
        assert_eq!(dims(&split_commutative_algebra(&alg).unwrap()), vec![1, 1, 2]);
    }

    #[test]
    fn z8_over_rationals_and_gaussian() {
        let alg = abelian_group_algebra(FieldTag::Rational, &[8]);
        assert_eq!(dims(&split_commutative_algebra(&alg).unwrap()), vec![1, 1, 2, 4]);
        let alg = abelian_group_algebra(FieldTag::Cyclotomic(4), &[8]);
        let blocks = split_commutative_algebra(&alg).unwrap();
        assert_eq!(dims(&blocks), vec![1, 1, 1, 1, 2, 2]);
        check_complete(&alg, &blocks);
    }

    #[test]
    fn local_algebra_with_nilpotents_over_q() {
        // Q[x]/(x^2) x Q: basis 1a, x, 1b
        let q = FieldTag::Rational;
        let mut mult = vec![q.zero(); 27];
        let set = |m: &mut Vec<FieldElem>, i: usize, j: usize, k: usize| m[(i * 3 + j) * 3 + k] = q.one();
        set(&mut mult, 0, 0, 0);
        set(&mut mult, 0, 1, 1);
        set(&mut mult, 1, 0, 1);
        set(&mut mult, 2, 2, 2);
        let alg = AlgebraByStructureConstants::new(q, 3, mult, vec![q.one(), q.zero(), q.one()]).unwrap();
        let blocks = split_commutative_algebra(&alg).unwrap();
        assert_eq!(dims(&blocks), vec![1, 2]);
        check_complete(&alg, &blocks);
    }

    #[test]
    fn validation_errors() {
        let q = FieldTag::Rational;
        let alg = abelian_group_algebra(q, &[2]);
        let bad_unit = AlgebraByStructureConstants::new(q, 2, alg.mult.clone(), vec![q.zero(), q.one()]);
        assert!(matches!(bad_unit, Err(AlgebraError::NoUnit(_))));
        // 2x2 matrices are not commutative
        let mut mult = vec![q.zero(); 64];
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    // E_ij E_jl = E_il
                    mult[((i * 2 + j) * 4 + (j * 2 + l)) * 4 + (i * 2 + l)] = q.one();
                }
            }
        }
        let unit = vec![q.one(), q.zero(), q.zero(), q.one()];
        let mat = AlgebraByStructureConstants::new(q, 4, mult, unit).unwrap();
        assert!(matches!(split_commutative_algebra(&mat), Err(AlgebraError::NotCommutative(_, _))));
        assert_eq!(mat.center_basis().len(), 1);
    }
}
