//! Davydov-Yetter cochain complexes of tensor functors between pointed categories.
//!
//! A natural endotransformation of `(x)^n o F^n` assigns one scalar to each `n`-tuple of
//! simples, so `C^n` is the space of functions `G^n -> k` and
//! `(df)(g_0..g_n) = f(g_1..g_n) + sum_{i=1}^{n} (-1)^i f(.., g_{i-1} g_i, ..) + (-1)^{n+1} f(g_0..g_{n-1})`.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{ExactMatrix, FieldElem, FieldTag, SparseEchelon};
use crate::pointed::FiniteAbelianGroup;

pub const MAX_COCHAIN_ENTRIES: u128 = 1_000_000;
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DyError {
    #[error("|G|^(n_max+1) = {0} exceeds the limit {1}")]
    SizeGuardExceeded(u128, u128),
    #[error("n_max must lie in 1..={max}, got {got}")]
    BadDegree { got: usize, max: usize },
    #[error("invalid group homomorphism: {0}")]
    BadHom(String),
    #[error("d^{} o d^{} is nonzero", .0 + 1, .0)]
    ComplexNotValid(usize),
    #[error("shape error: {0}")]
    Shape(String),
}

/// A pointed tensor functor `Vect(G) -> Vect(K)` induced by a group homomorphism, with the
/// coefficient field used for cochains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointedFunctorData {
    source_group: FiniteAbelianGroup,
    target_group: FiniteAbelianGroup,
    /// Image of each source generator in target coordinates.
    hom: Vec<Vec<u64>>,
    field: FieldTag,
}

impl PointedFunctorData {
    pub fn new(
        source_group: FiniteAbelianGroup,
        target_group: FiniteAbelianGroup,
        hom: Vec<Vec<u64>>,
        field: FieldTag,
    ) -> Result<Self, DyError> {
        let (src, tgt) = (source_group.cyclic_orders(), target_group.cyclic_orders());
        if hom.len() != src.len() {
            return Err(DyError::BadHom(format!("expected {} generator images, got {}", src.len(), hom.len())));
        }
        for (i, img) in hom.iter().enumerate() {
            if img.len() != tgt.len() {
                return Err(DyError::BadHom(format!("image of generator {i} has {} coordinates", img.len())));
            }
            if img.iter().zip(tgt).any(|(&c, &m)| (u128::from(c) * u128::from(src[i])) % u128::from(m) != 0) {
                return Err(DyError::BadHom(format!("image of generator {i} has order not dividing {}", src[i])));
            }
        }
        let hom = hom.into_iter().map(|img| img.iter().zip(tgt).map(|(&c, &m)| c % m).collect()).collect();
        Ok(PointedFunctorData { source_group, target_group, hom, field })
    }

    pub fn identity(group: FiniteAbelianGroup, field: FieldTag) -> Self {
        let r = group.cyclic_orders().len();
        let hom = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
        PointedFunctorData { source_group: group.clone(), target_group: group, hom, field }
    }

    pub fn source_group(&self) -> &FiniteAbelianGroup {
        &self.source_group
    }

    pub fn target_group(&self) -> &FiniteAbelianGroup {
        &self.target_group
    }

    pub fn hom(&self) -> &[Vec<u64>] {
        &self.hom
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }
}

/// Sparse matrix with integer entries, stored by row with sorted columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntSparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, i64)>>,
}

impl IntSparseMatrix {
    fn compose(&self, inner: &IntSparseMatrix) -> IntSparseMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| {
                let mut acc = std::collections::BTreeMap::<usize, i64>::new();
                for &(k, a) in row {
                    for &(c, b) in &inner.entries[k] {
                        *acc.entry(c).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        IntSparseMatrix { rows: self.rows, cols: inner.cols, entries }
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn to_exact(&self, field: FieldTag) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(field, self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, field.from_i64(v));
            }
        }
        m
    }

    /// Rank over `field`, by sparse elimination.
    pub fn rank(&self, field: FieldTag) -> usize {
        let mut ech = SparseEchelon::new(field);
        for row in &self.entries {
            if ech.rank() == self.cols {
                break;
            }
            let r: Vec<(usize, FieldElem)> =
                row.iter().map(|&(c, v)| (c, field.from_i64(v))).filter(|(_, v)| !v.is_zero()).collect();
            ech.insert(r);
        }
        ech.rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DYComplex {
    field: FieldTag,
    n_max: usize,
    cochain_dims: Vec<usize>,
    deltas: Vec<IntSparseMatrix>,
}

impl DYComplex {
    /// Assemble a complex from integer differentials, checking shapes and `d o d = 0`.
    pub fn from_deltas(field: FieldTag, cochain_dims: Vec<usize>, deltas: Vec<IntSparseMatrix>) -> Result<Self, DyError> {
        if deltas.is_empty() || cochain_dims.len() != deltas.len() + 1 {
            return Err(DyError::Shape("need n_max >= 1 differentials and n_max + 1 cochain dimensions".into()));
        }
        for (n, d) in deltas.iter().enumerate() {
            if d.cols != cochain_dims[n] || d.rows != cochain_dims[n + 1] || d.entries.len() != d.rows {
                return Err(DyError::Shape(format!("d^{n} has the wrong shape")));
            }
            if d.entries.iter().flatten().any(|&(c, _)| c >= d.cols) {
                return Err(DyError::Shape(format!("d^{n} has an out-of-range column")));
            }
        }
        for n in 0..deltas.len().saturating_sub(1) {
            let dd = deltas[n + 1].compose(&deltas[n]);
            let vanishes = dd.entries.iter().flatten().all(|&(_, v)| field.from_i64(v).is_zero());
            if !vanishes {
                return Err(DyError::ComplexNotValid(n));
            }
        }
        Ok(DYComplex { field, n_max: deltas.len(), cochain_dims, deltas })
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn cochain_dims(&self) -> &[usize] {
        &self.cochain_dims
    }

    pub fn delta(&self, n: usize) -> &IntSparseMatrix {
        &self.deltas[n]
    }

    pub fn delta_exact(&self, n: usize) -> ExactMatrix {
        self.deltas[n].to_exact(self.field)
    }
}

pub fn build_dy_complex(f: &PointedFunctorData, n_max: usize) -> Result<DYComplex, DyError> {
    if n_max == 0 || n_max > MAX_DEGREE {
        return Err(DyError::BadDegree { got: n_max, max: MAX_DEGREE });
    }
    let g = &f.source_group;
    let size = g.order().checked_pow(n_max as u32 + 1).unwrap_or(u128::MAX);
    if size > MAX_COCHAIN_ENTRIES {
        return Err(DyError::SizeGuardExceeded(size, MAX_COCHAIN_ENTRIES));
    }
    let q = g.order() as usize;
    let table: Vec<usize> = (0..q * q).map(|x| g.add(x / q, x % q)).collect();
    let cochain_dims: Vec<usize> = (0..=n_max).map(|n| q.pow(n as u32)).collect();
    let deltas: Vec<IntSparseMatrix> = (0..n_max)
        .map(|n| {
            // Tuples are encoded with g_0 as the most significant digit.
            let entries = (0..cochain_dims[n + 1])
                .map(|row| {
                    let mut t = vec![0usize; n + 1];
                    let mut x = row;
                    for slot in t.iter_mut().rev() {
                        *slot = x % q;
                        x /= q;
                    }
                    let encode = |v: &[usize]| v.iter().fold(0, |acc, &d| acc * q + d);
                    let mut acc = std::collections::BTreeMap::<usize, i64>::new();
                    *acc.entry(encode(&t[1..])).or_default() += 1;
                    for i in 1..=n {
                        let mut merged = Vec::with_capacity(n);
                        merged.extend_from_slice(&t[..i - 1]);
                        merged.push(table[t[i - 1] * q + t[i]]);
                        merged.extend_from_slice(&t[i + 1..]);
                        *acc.entry(encode(&merged)).or_default() += if i % 2 == 0 { 1 } else { -1 };
                    }
                    *acc.entry(encode(&t[..n])).or_default() += if (n + 1) % 2 == 0 { 1 } else { -1 };
                    acc.into_iter().filter(|&(_, v)| v != 0).collect()
                })
                .collect();
            IntSparseMatrix { rows: cochain_dims[n + 1], cols: cochain_dims[n], entries }
        })
        .collect();
    for n in 0..n_max.saturating_sub(1) {
        if !deltas[n + 1].compose(&deltas[n]).is_zero() {
            return Err(DyError::ComplexNotValid(n));
        }
    }
    Ok(DYComplex { field: f.field, n_max, cochain_dims, deltas })
}

/// `dim H^n` for `n = 0..n_max-1`.
pub fn dy_cohomology_dims(c: &DYComplex) -> Vec<usize> {
    let ranks: Vec<usize> = c.deltas.iter().map(|d| d.rank(c.field)).collect();
    (0..c.n_max).map(|n| c.cochain_dims[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] }).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparabilityDiagnostic {
    pub h2_dim: usize,
    pub h3_dim: usize,
    pub consistent_with_separability: bool,
}

/// `H^2` and `H^3` of the identity functor of `Vect(G)`.
pub fn separability_diagnostic(g: &FiniteAbelianGroup, field: FieldTag) -> Result<SeparabilityDiagnostic, DyError> {
    let c = build_dy_complex(&PointedFunctorData::identity(g.clone(), field), 4)?;
    let dims = dy_cohomology_dims(&c);
    Ok(SeparabilityDiagnostic {
        h2_dim: dims[2],
        h3_dim: dims[3],
        consistent_with_separability: dims[2] == 0 && dims[3] == 0,
    })
}
