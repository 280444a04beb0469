//! Z+-rings given by non-negative structure constants, the trace functional `tau`,
//! and exhaustive search for weak based involutions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasedRingError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("negative structure constant: {0}")]
    NegativeConstant(String),
    #[error("associativity fails: (b{0} b{1}) b{2} and b{0} (b{1} b{2}) differ in coefficient {3}")]
    NotAssociative(usize, usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    UnitLawFails(usize),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("rank {0} exceeds the exhaustive-search limit {1}")]
    RankTooLargeForExhaustiveSearch(usize, usize),
    #[error("permutation search with {0} candidates exceeds the limit {1}")]
    SearchTooLarge(u128, u128),
}

/// Raw ring data. `mult[(i * rank + j) * rank + k] = c_{ij}^k` with `b_i b_j = sum_k c_{ij}^k b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasedRingData {
    pub rank: usize,
    pub labels: Vec<String>,
    pub mult: Vec<i64>,
    pub unit_coeffs: Vec<i64>,
    pub involution: Option<Vec<usize>>,
}

impl BasedRingData {
    /// Build from a nested `rank x rank x rank` array; labels default to `b0, b1, ...`.
    pub fn from_nested(
        labels: Option<Vec<String>>,
        mult: &[Vec<Vec<i64>>],
        unit_coeffs: Vec<i64>,
        involution: Option<Vec<usize>>,
    ) -> Result<Self, BasedRingError> {
        let rank = mult.len();
        let mut flat = Vec::with_capacity(rank * rank * rank);
        for (i, plane) in mult.iter().enumerate() {
            if plane.len() != rank {
                return Err(BasedRingError::Shape(format!("mult[{i}] has {} rows, expected {rank}", plane.len())));
            }
            for (j, row) in plane.iter().enumerate() {
                if row.len() != rank {
                    return Err(BasedRingError::Shape(format!("mult[{i}][{j}] has length {}, expected {rank}", row.len())));
                }
                flat.extend_from_slice(row);
            }
        }
        let labels = labels.unwrap_or_else(|| (0..rank).map(|i| format!("b{i}")).collect());
        Ok(BasedRingData { rank, labels, mult: flat, unit_coeffs, involution })
    }

    /// Nested `rank x rank x rank` view of the structure constants.
    pub fn nested_mult(&self) -> Vec<Vec<Vec<i64>>> {
        let r = self.rank;
        (0..r).map(|i| (0..r).map(|j| self.mult[(i * r + j) * r..(i * r + j + 1) * r].to_vec()).collect()).collect()
    }
}

/// A ring whose axioms have been checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ValidatedRing {
    data: BasedRingData,
    i0: Vec<usize>,
}

pub const MAX_GROUP_RING_RANK: usize = 128;
pub const MAX_INVOLUTION_SEARCH_RANK: usize = 12;
const CANONICAL_SEARCH_LIMIT: u128 = 2_000_000;

pub fn validate_zplus_ring(data: BasedRingData) -> Result<ValidatedRing, BasedRingError> {
    let r = data.rank;
    if r == 0 {
        return Err(BasedRingError::Shape("rank must be positive".into()));
    }
    if data.labels.len() != r {
        return Err(BasedRingError::Shape(format!("{} labels for rank {r}", data.labels.len())));
    }
    if data.mult.len() != r * r * r {
        return Err(BasedRingError::Shape(format!("{} structure constants, expected {}", data.mult.len(), r * r * r)));
    }
    if data.unit_coeffs.len() != r {
        return Err(BasedRingError::Shape(format!("{} unit coefficients for rank {r}", data.unit_coeffs.len())));
    }
    if let Some(pos) = data.mult.iter().position(|&c| c < 0) {
        let (ij, k) = (pos / r, pos % r);
        return Err(BasedRingError::NegativeConstant(format!("c[{}][{}][{k}] = {}", ij / r, ij % r, data.mult[pos])));
    }
    if let Some(i) = data.unit_coeffs.iter().position(|&c| c < 0) {
        return Err(BasedRingError::NegativeConstant(format!("unit_coeffs[{i}] = {}", data.unit_coeffs[i])));
    }
    let c = |i: usize, j: usize, k: usize| i128::from(data.mult[(i * r + j) * r + k]);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let left: i128 = (0..r).map(|m| c(i, j, m) * c(m, k, l)).sum();
                    let right: i128 = (0..r).map(|m| c(j, k, m) * c(i, m, l)).sum();
                    if left != right {
                        return Err(BasedRingError::NotAssociative(i, j, k, l));
                    }
                }
            }
        }
    }
    for i in 0..r {
        for k in 0..r {
            let delta = i128::from(i == k);
            let left: i128 = (0..r).map(|a| i128::from(data.unit_coeffs[a]) * c(a, i, k)).sum();
            let right: i128 = (0..r).map(|a| i128::from(data.unit_coeffs[a]) * c(i, a, k)).sum();
            if left != delta || right != delta {
                return Err(BasedRingError::UnitLawFails(i));
            }
        }
    }
    let i0 = (0..r).filter(|&i| data.unit_coeffs[i] != 0).collect();
    let ring = ValidatedRing { data, i0 };
    if let Some(inv) = ring.data.involution.clone() {
        ring.check_involution(&inv)?;
    }
    Ok(ring)
}

impl ValidatedRing {
    pub fn data(&self) -> &BasedRingData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.data.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.data.rank;
        self.data.mult[(i * r + j) * r + k] as u64
    }

    pub fn unit_coeffs(&self) -> &[i64] {
        &self.data.unit_coeffs
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.data.involution.as_deref()
    }

    /// Indices in the support of the unit.
    pub fn i0_set(&self) -> &[usize] {
        &self.i0
    }

    /// `tau(x) = sum_{i in I0} x_i`.
    pub fn tau(&self, x: &[i64]) -> i64 {
        assert_eq!(x.len(), self.rank(), "element length must equal the rank");
        self.i0.iter().map(|&i| x[i]).sum()
    }

    /// `tau(b_i b_j)`.
    pub fn tau_of_product(&self, i: usize, j: usize) -> u64 {
        self.i0.iter().map(|&k| self.c(i, j, k)).sum()
    }

    pub fn multiply(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let r = self.rank();
        let mut out = vec![0i64; r];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += xi * yj * self.c(i, j, k) as i64;
                }
            }
        }
        out
    }

    /// `b = sum_i b_i`, `b^2 = sum_k n_k b_k`; returns `(n_k)`.
    pub fn square_of_basis_sum(&self) -> Vec<u64> {
        let r = self.rank();
        (0..r).map(|k| (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).map(|(i, j)| self.c(i, j, k)).sum()).collect()
    }

    fn check_involution(&self, inv: &[usize]) -> Result<(), BasedRingError> {
        let r = self.rank();
        if inv.len() != r || inv.iter().any(|&x| x >= r) {
            return Err(BasedRingError::InvalidInvolution(format!("not a map on 0..{r}")));
        }
        if let Some(i) = (0..r).find(|&i| inv[inv[i]] != i) {
            return Err(BasedRingError::InvalidInvolution(format!("{i}** != {i}")));
        }
        if let Some((i, j, k)) = self.anti_automorphism_violation(inv) {
            return Err(BasedRingError::InvalidInvolution(format!(
                "c[{i}][{j}][{k}] != c[{}][{}][{}]",
                inv[j], inv[i], inv[k]
            )));
        }
        Ok(())
    }

    fn anti_automorphism_violation(&self, inv: &[usize]) -> Option<(usize, usize, usize)> {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.c(i, j, k) != self.c(inv[j], inv[i], inv[k]) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Certificate for a given involution, or `None` if it fails the weak based axioms.
    pub fn certify(&self, inv: &[usize]) -> Option<WeakBasedCertificate> {
        self.check_involution(inv).ok()?;
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                let t = self.tau_of_product(i, j);
                if (j == inv[i]) != (t > 0) {
                    return None;
                }
            }
        }
        let t_values: Vec<u64> = (0..r).map(|i| self.tau_of_product(i, inv[i])).collect();
        let based = t_values.iter().all(|&t| t == 1);
        let mut data = self.data.clone();
        data.involution = Some(inv.to_vec());
        Some(WeakBasedCertificate {
            ring: ValidatedRing { data, i0: self.i0.clone() },
            t_values,
            i0_set: self.i0.clone(),
            based,
        })
    }
}

/// A ring together with an involution satisfying the weak based axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeakBasedCertificate {
    pub ring: ValidatedRing,
    pub t_values: Vec<u64>,
    pub i0_set: Vec<usize>,
    /// All `t_i = 1`.
    pub based: bool,
}

impl WeakBasedCertificate {
    pub fn involution(&self) -> &[usize] {
        self.ring.involution().expect("certificates carry an involution")
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }
}

/// Every involution making the ring weak based, sorted by the involution vector.
pub fn find_weak_based_involutions(ring: &ValidatedRing) -> Result<Vec<WeakBasedCertificate>, BasedRingError> {
    let r = ring.rank();
    if r > MAX_INVOLUTION_SEARCH_RANK {
        return Err(BasedRingError::RankTooLargeForExhaustiveSearch(r, MAX_INVOLUTION_SEARCH_RANK));
    }
    let mut out = Vec::new();
    let mut inv = vec![usize::MAX; r];
    involution_dfs(ring, &mut inv, &mut out);
    out.sort_by(|a, b| a.involution().cmp(b.involution()));
    Ok(out)
}

fn involution_dfs(ring: &ValidatedRing, inv: &mut [usize], out: &mut Vec<WeakBasedCertificate>) {
    let Some(i) = inv.iter().position(|&x| x == usize::MAX) else {
        if let Some(cert) = ring.certify(inv) {
            out.push(cert);
        }
        return;
    };
    let unit = ring.unit_coeffs();
    for j in i..inv.len() {
        if inv[j] != usize::MAX || unit[i] != unit[j] {
            continue;
        }
        if ring.tau_of_product(i, j) == 0 || ring.tau_of_product(j, i) == 0 {
            continue;
        }
        inv[i] = j;
        inv[j] = i;
        involution_dfs(ring, inv, out);
        inv[i] = usize::MAX;
        inv[j] = usize::MAX;
    }
}

/// Integral group ring of `Z/n_1 x ... x Z/n_r`. Element `(a_1, ..., a_r)` has index
/// `a_1 + n_1 (a_2 + n_2 (...))`; involution `g -> g^{-1}`.
pub fn group_ring(orders: &[u64]) -> Result<BasedRingData, BasedRingError> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(BasedRingError::Shape("group orders must be a non-empty list of positive integers".into()));
    }
    let rank = orders.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n as usize)).unwrap_or(usize::MAX);
    if rank > MAX_GROUP_RING_RANK {
        return Err(BasedRingError::Shape(format!("group order {rank} exceeds {MAX_GROUP_RING_RANK}")));
    }
    let digits = |mut x: usize| -> Vec<u64> {
        orders
            .iter()
            .map(|&n| {
                let d = (x as u64) % n;
                x /= n as usize;
                d
            })
            .collect()
    };
    let index = |ds: &[u64]| -> usize { ds.iter().zip(orders).rev().fold(0, |acc, (&d, &n)| acc * n as usize + d as usize) };
    let mut mult = vec![0i64; rank * rank * rank];
    let mut involution = vec![0usize; rank];
    let mut labels = Vec::with_capacity(rank);
    for i in 0..rank {
        let di = digits(i);
        for j in 0..rank {
            let dj = digits(j);
            let s: Vec<u64> = di.iter().zip(&dj).zip(orders).map(|((a, b), n)| (a + b) % n).collect();
            mult[(i * rank + j) * rank + index(&s)] = 1;
        }
        let neg: Vec<u64> = di.iter().zip(orders).map(|(a, n)| (n - a) % n).collect();
        involution[i] = index(&neg);
        labels.push(match di.as_slice() {
            [0] => "1".to_string(),
            [1] => "g".to_string(),
            [a] => format!("g^{a}"),
            _ => format!("({})", di.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
        });
    }
    let mut unit_coeffs = vec![0i64; rank];
    unit_coeffs[0] = 1;
    Ok(BasedRingData { rank, labels, mult, unit_coeffs, involution: Some(involution) })
}

/// Relabel so that new basis element `i` is old element `perm[i]`.
pub fn permute_ring(data: &BasedRingData, perm: &[usize]) -> BasedRingData {
    let r = data.rank;
    let mut inverse = vec![0usize; r];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let mut mult = vec![0i64; r * r * r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                mult[(i * r + j) * r + k] = data.mult[(perm[i] * r + perm[j]) * r + perm[k]];
            }
        }
    }
    BasedRingData {
        rank: r,
        labels: perm.iter().map(|&o| data.labels[o].clone()).collect(),
        mult,
        unit_coeffs: perm.iter().map(|&o| data.unit_coeffs[o]).collect(),
        involution: data.involution.as_ref().map(|inv| perm.iter().map(|&o| inverse[inv[o]]).collect()),
    }
}

/// Canonical representative up to basis permutation: basis elements are grouped by a
/// permutation-invariant signature, and within that grouping the structure constants
/// (then unit coefficients) are lexicographically minimal. Labels and involution are
/// carried along but do not influence the choice.
pub fn canonical_form(ring: &ValidatedRing) -> Result<BasedRingData, BasedRingError> {
    let r = ring.rank();
    let sig = |i: usize| -> Vec<i64> {
        let row: u64 = (0..r).flat_map(|j| (0..r).map(move |k| (j, k))).map(|(j, k)| ring.c(i, j, k)).sum();
        let col: u64 = (0..r).flat_map(|j| (0..r).map(move |k| (j, k))).map(|(j, k)| ring.c(j, i, k)).sum();
        let out: u64 = (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).map(|(a, b)| ring.c(a, b, i)).sum();
        let sq: u64 = (0..r).map(|k| ring.c(i, i, k)).sum();
        vec![-ring.unit_coeffs()[i], ring.c(i, i, i) as i64, sq as i64, row as i64, col as i64, out as i64]
    };
    let sigs: Vec<Vec<i64>> = (0..r).map(sig).collect();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    // Consecutive runs of equal signature may be permuted freely.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if sigs[g[0]] == sigs[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let count: u128 = groups.iter().map(|g| (1..=g.len() as u128).product::<u128>()).product();
    if count > CANONICAL_SEARCH_LIMIT {
        return Err(BasedRingError::SearchTooLarge(count, CANONICAL_SEARCH_LIMIT));
    }
    let mut best: Option<BasedRingData> = None;
    let mut perm = Vec::with_capacity(r);
    let mut used = vec![false; r];
    canonical_dfs(ring.data(), &groups, 0, &mut perm, &mut used, &mut best);
    Ok(best.expect("at least one permutation"))
}

fn canonical_dfs(
    data: &BasedRingData,
    groups: &[Vec<usize>],
    gi: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut Option<BasedRingData>,
) {
    if perm.len() == data.rank {
        let cand = permute_ring(data, perm);
        let better = match best {
            None => true,
            Some(b) => (&cand.mult, &cand.unit_coeffs) < (&b.mult, &b.unit_coeffs),
        };
        if better {
            *best = Some(cand);
        }
        return;
    }
    let start: usize = groups[..gi].iter().map(Vec::len).sum();
    let (g, next) = if perm.len() + 1 == start + groups[gi].len() { (gi, gi + 1) } else { (gi, gi) };
    for &x in &groups[g] {
        if used[x] {
            continue;
        }
        used[x] = true;
        perm.push(x);
        canonical_dfs(data, groups, next, perm, used, best);
        perm.pop();
        used[x] = false;
    }
}

/// Whether two rings agree up to basis permutation.
pub fn rings_equivalent(a: &ValidatedRing, b: &ValidatedRing) -> Result<bool, BasedRingError> {
    if a.rank() != b.rank() {
        return Ok(false);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    Ok(ca.mult == cb.mult && ca.unit_coeffs == cb.unit_coeffs)
}

/// The Fibonacci ring: basis `1, b` with `b^2 = 1 + b`.
pub fn fibonacci_ring() -> BasedRingData {
    BasedRingData::from_nested(
        Some(vec!["1".into(), "b".into()]),
        &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
        vec![1, 0],
        Some(vec![0, 1]),
    )
    .expect("fixed shape")
}

/// Rank-3 ring with basis `1, c, h`: `c^2 = 2c`, `ch = hc = c`, `h^2 = 1`.
pub fn real_module_fusion_ring() -> BasedRingData {
    BasedRingData::from_nested(
        Some(vec!["1".into(), "c".into(), "h".into()]),
        &[
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 2, 0], vec![0, 1, 0]],
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
        ],
        vec![1, 0, 0],
        None,
    )
    .expect("fixed shape")
}
