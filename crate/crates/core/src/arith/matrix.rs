use std::fmt;

use serde::Serialize;

use super::{ArithError, FieldElem, FieldTag};

/// Dense row-major matrix over one exact field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactMatrix {
    field: FieldTag,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldTag, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldTag, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldTag, rows: Vec<Vec<FieldElem>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ArithError::Shape(format!("ragged rows: expected {c} columns, got {}", row.len())));
            }
            for e in row {
                if e.tag() != field {
                    return Err(ArithError::FieldMismatch { expected: field, found: e.tag() });
                }
                entries.push(e);
            }
        }
        Ok(ExactMatrix { field, rows: r, cols: c, entries })
    }

    pub fn from_i64_rows(field: FieldTag, rows: &[Vec<i64>]) -> Self {
        let conv = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, conv).expect("uniform integer rows")
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        assert_eq!(v.tag(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElem::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(ArithError::FieldMismatch { expected: self.field, found: other.field });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.entries[i * other.cols + j] + &(a * b);
                        out.entries[i * other.cols + j] = cur;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form (Gauss-Jordan, leftmost pivot, pivots scaled to 1)
    /// together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(prow, sel);
            let inv = m.get(prow, col).inv().unwrap();
            for c in col..m.cols {
                let v = m.get(prow, c) * &inv;
                m.set(prow, c, v);
            }
            for r in 0..m.rows {
                if r == prow || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let p = m.get(prow, c);
                    if !p.is_zero() {
                        let v = m.get(r, c) - &(&factor * p);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Rank over the matrix's field, by sparse incremental elimination.
    pub fn rank(&self) -> usize {
        let mut ech = SparseEchelon::new(self.field);
        for r in 0..self.rows {
            let row: Vec<(usize, FieldElem)> = self
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect();
            ech.insert(row);
        }
        ech.rank()
    }

    /// Basis of the right kernel. One vector per non-pivot column `f` of the RREF:
    /// entry 1 at `f`, `-rref[i][f]` at the `i`-th pivot column, zero elsewhere.
    /// Vectors are listed by increasing free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pi = 0;
        for free in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == free {
                pi += 1;
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, free);
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built row echelon basis of sparse vectors. Each stored row has
/// leading coefficient 1.
#[derive(Clone, Debug)]
pub(crate) struct SparseEchelon {
    field: FieldTag,
    // pivot column -> row, kept sorted by pivot
    rows: std::collections::BTreeMap<usize, Vec<(usize, FieldElem)>>,
}

impl SparseEchelon {
    pub(crate) fn new(field: FieldTag) -> Self {
        SparseEchelon { field, rows: Default::default() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored basis; returns the residue (empty if dependent).
    pub(crate) fn reduce(&self, mut row: Vec<(usize, FieldElem)>) -> Vec<(usize, FieldElem)> {
        // Entries left of the eliminated column are untouched by `axpy`, so the
        // cursor stays put after each elimination.
        let mut idx = 0;
        while idx < row.len() {
            let c = row[idx].0;
            if let Some(p) = self.rows.get(&c) {
                let factor = row[idx].1.clone();
                row = axpy(&row, p, &factor);
            } else {
                idx += 1;
            }
        }
        row
    }

    /// Insert a row; returns `true` if it increased the rank.
    pub(crate) fn insert(&mut self, row: Vec<(usize, FieldElem)>) -> bool {
        let row = self.reduce(row);
        let Some((c, lead)) = row.iter().find(|(_, v)| !v.is_zero()).cloned() else {
            return false;
        };
        let inv = lead.inv().unwrap();
        let normalized: Vec<(usize, FieldElem)> =
            row.into_iter().filter(|(cc, _)| *cc >= c).map(|(cc, v)| (cc, &v * &inv)).collect();
        debug_assert_eq!(self.field, inv.tag());
        self.rows.insert(c, normalized);
        true
    }
}

/// `row - factor * pivot` on sorted sparse vectors, dropping zeros.
fn axpy(row: &[(usize, FieldElem)], pivot: &[(usize, FieldElem)], factor: &FieldElem) -> Vec<(usize, FieldElem)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = pivot.get(j).map_or(usize::MAX, |x| x.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
