//! Z+-modules over based rings, irreducibility tests, and bounded exhaustive
//! enumeration of irreducible modules and of ring homomorphisms.
//!
//! Action convention: `action[i][l][k] = a^k_{il}`, so row `l` of the matrix `A_i`
//! expands `m_l b_i`. The module law reads `A_i A_j = sum_k c_{ij}^k A_k`, and the
//! unit acts by `sum_i a^i A_i = I`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::based_ring::{find_weak_based_involutions, ValidatedRing, WeakBasedCertificate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZModError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("negative action entry: {0}")]
    NegativeEntry(String),
    #[error("module law fails for the product b{0} b{1}")]
    ActionLawFails(usize, usize),
    #[error("the unit does not act as the identity")]
    UnitActionFails,
    #[error("ring admits no weak based involution")]
    RingNotWeakBased,
    #[error("ring rank {0} exceeds the enumeration guard {1}")]
    RankGuardExceeded(usize, usize),
    #[error("search bound {0} exceeds the guard {1}")]
    BoundTooLarge(u64, u64),
    #[error("permutation search with {0} candidates exceeds the limit {1}")]
    SearchTooLarge(u128, u128),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZPlusModuleData {
    pub rank: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidatedModule {
    #[serde(skip)]
    ring: ValidatedRing,
    rank: usize,
    action: Vec<Vec<Vec<u64>>>,
}

pub fn validate_module(ring: &ValidatedRing, data: &ZPlusModuleData) -> Result<ValidatedModule, ZModError> {
    let r = ring.rank();
    let n = data.rank;
    if n == 0 {
        return Err(ZModError::Shape("module rank must be positive".into()));
    }
    if data.action.len() != r {
        return Err(ZModError::Shape(format!("{} action matrices for ring rank {r}", data.action.len())));
    }
    let mut action = Vec::with_capacity(r);
    for (i, m) in data.action.iter().enumerate() {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(ZModError::Shape(format!("action[{i}] is not {n}x{n}")));
        }
        let mut mm = Vec::with_capacity(n);
        for (l, row) in m.iter().enumerate() {
            let mut rr = Vec::with_capacity(n);
            for (k, &v) in row.iter().enumerate() {
                if v < 0 {
                    return Err(ZModError::NegativeEntry(format!("action[{i}][{l}][{k}] = {v}")));
                }
                rr.push(v as u64);
            }
            mm.push(rr);
        }
        action.push(mm);
    }
    let flat: Vec<Vec<u64>> = action.iter().map(|m| m.concat()).collect();
    if let Some((i, j)) = module_law_violation(ring, n, &flat) {
        return Err(ZModError::ActionLawFails(i, j));
    }
    if !unit_acts_trivially(ring, n, &flat) {
        return Err(ZModError::UnitActionFails);
    }
    Ok(ValidatedModule { ring: ring.clone(), rank: n, action })
}

fn module_law_violation(ring: &ValidatedRing, n: usize, act: &[Vec<u64>]) -> Option<(usize, usize)> {
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            for l in 0..n {
                for k in 0..n {
                    let lhs: u128 = (0..n).map(|m| act[i][l * n + m] as u128 * act[j][m * n + k] as u128).sum();
                    let rhs: u128 = (0..r).map(|m| ring.c(i, j, m) as u128 * act[m][l * n + k] as u128).sum();
                    if lhs != rhs {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    None
}

fn unit_acts_trivially(ring: &ValidatedRing, n: usize, act: &[Vec<u64>]) -> bool {
    (0..n).all(|l| {
        (0..n).all(|k| {
            let s: u128 = ring.i0_set().iter().map(|&i| ring.unit_coeffs()[i] as u128 * act[i][l * n + k] as u128).sum();
            s == u128::from(l == k)
        })
    })
}

impl ValidatedModule {
    pub fn ring(&self) -> &ValidatedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self) -> &[Vec<Vec<u64>>] {
        &self.action
    }

    pub fn to_data(&self) -> ZPlusModuleData {
        ZPlusModuleData {
            rank: self.rank,
            action: self.action.iter().map(|m| m.iter().map(|row| row.iter().map(|&v| v as i64).collect()).collect()).collect(),
        }
    }

    fn reach(&self, start: usize, undirected: bool) -> Vec<bool> {
        let n = self.rank;
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(l) = stack.pop() {
            for k in 0..n {
                if seen[k] {
                    continue;
                }
                let edge = self.action.iter().any(|m| m[l][k] > 0 || (undirected && m[k][l] > 0));
                if edge {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        seen
    }

    /// Every single basis vector generates the whole module.
    pub fn is_irreducible(&self) -> bool {
        (0..self.rank).all(|l| self.reach(l, false).into_iter().all(|x| x))
    }

    /// The undirected support graph of the action is connected.
    pub fn is_indecomposable(&self) -> bool {
        self.reach(0, true).into_iter().all(|x| x)
    }

    /// Representative up to simultaneous permutation of the module basis: basis vectors
    /// are grouped by a permutation-invariant signature and the concatenated action
    /// matrices are lexicographically minimal within that grouping.
    pub fn canonical(&self) -> Result<ValidatedModule, ZModError> {
        let n = self.rank;
        let sig = |l: usize| -> Vec<u64> {
            self.action
                .iter()
                .flat_map(|m| [m[l].iter().sum::<u64>(), (0..n).map(|x| m[x][l]).sum::<u64>(), m[l][l]])
                .collect()
        };
        let sigs: Vec<Vec<u64>> = (0..n).map(sig).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &l in &order {
            match groups.last_mut() {
                Some(g) if sigs[g[0]] == sigs[l] => g.push(l),
                _ => groups.push(vec![l]),
            }
        }
        let count: u128 = groups.iter().map(|g| (1..=g.len() as u128).product::<u128>()).product();
        if count > CANONICAL_SEARCH_LIMIT {
            return Err(ZModError::SearchTooLarge(count, CANONICAL_SEARCH_LIMIT));
        }
        let mut best: Option<Vec<Vec<Vec<u64>>>> = None;
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.canonical_dfs(&groups, 0, &mut perm, &mut used, &mut best);
        Ok(ValidatedModule { ring: self.ring.clone(), rank: n, action: best.unwrap() })
    }

    fn canonical_dfs(
        &self,
        groups: &[Vec<usize>],
        gi: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<Vec<Vec<Vec<u64>>>>,
    ) {
        let n = self.rank;
        if perm.len() == n {
            let cand: Vec<Vec<Vec<u64>>> = self
                .action
                .iter()
                .map(|m| (0..n).map(|l| (0..n).map(|k| m[perm[l]][perm[k]]).collect()).collect())
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                *best = Some(cand);
            }
            return;
        }
        let start: usize = groups[..gi].iter().map(Vec::len).sum();
        let next = if perm.len() + 1 == start + groups[gi].len() { gi + 1 } else { gi };
        for &x in &groups[gi] {
            if used[x] {
                continue;
            }
            used[x] = true;
            perm.push(x);
            self.canonical_dfs(groups, next, perm, used, best);
            perm.pop();
            used[x] = false;
        }
    }
}

const CANONICAL_SEARCH_LIMIT: u128 = 2_000_000;
pub const MAX_ENUMERATION_RING_RANK: usize = 8;
/// Largest `N` for which enumeration is attempted.
pub const MAX_BOUND_N: u64 = 16;

/// Bounds derived from `b = sum_i b_i` and `b^2 = sum_k n_k b_k`, `N = max n_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationBounds {
    pub n: u64,
    /// Irreducible modules have rank at most `N`.
    pub rank_bound: u64,
    /// Module search: `sum_{j,k} f_{l0}^j f_j^k <= N^2`.
    pub coeff_budget_module: u64,
}

impl EnumerationBounds {
    pub fn from_ring(ring: &ValidatedRing) -> Self {
        let n = ring.square_of_basis_sum().into_iter().max().unwrap_or(0);
        EnumerationBounds { n, rank_bound: n, coeff_budget_module: n * n }
    }

    /// Cap on each `g_i^j` for homomorphisms from this ring into a ring of rank `target_rank`.
    pub fn coeff_bound_hom(&self, target_rank: usize) -> u64 {
        target_rank as u64 * self.n
    }
}

/// How far the enumeration searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// The bounds above.
    #[default]
    Proven,
    /// Every cap doubled (quadrupled for quadratic budgets); used to confirm that the
    /// proven bounds miss nothing.
    Widened,
}

/// Weak based certificate for a ring: its stored involution if any, else the first
/// involution found by exhaustive search.
pub fn certificate_for(ring: &ValidatedRing) -> Result<WeakBasedCertificate, ZModError> {
    if let Some(inv) = ring.involution() {
        return ring.certify(inv).ok_or(ZModError::RingNotWeakBased);
    }
    let certs = find_weak_based_involutions(ring).map_err(|_| ZModError::RankGuardExceeded(ring.rank(), 12))?;
    certs.into_iter().next().ok_or(ZModError::RingNotWeakBased)
}

/// All irreducible Z+-modules up to basis permutation, in canonical order.
pub fn enumerate_irreducible_modules(
    cert: &WeakBasedCertificate,
    mode: SearchMode,
) -> Result<Vec<ValidatedModule>, ZModError> {
    let ring = &cert.ring;
    if ring.rank() > MAX_ENUMERATION_RING_RANK {
        return Err(ZModError::RankGuardExceeded(ring.rank(), MAX_ENUMERATION_RING_RANK));
    }
    let bounds = EnumerationBounds::from_ring(ring);
    if bounds.n > MAX_BOUND_N {
        return Err(ZModError::BoundTooLarge(bounds.n, MAX_BOUND_N));
    }
    let (rank_cap, f0_cap, budget) = match mode {
        SearchMode::Proven => (bounds.rank_bound, bounds.n, bounds.coeff_budget_module),
        SearchMode::Widened => (2 * bounds.rank_bound, 2 * bounds.n, 4 * bounds.coeff_budget_module),
    };
    let mut found: Vec<ValidatedModule> = Vec::new();
    for n in 1..=rank_cap as usize {
        let mut search = ModuleSearch::new(ring, n, f0_cap, budget);
        search.row(0);
        for act in search.results {
            let data = ZPlusModuleData {
                rank: n,
                action: act
                    .iter()
                    .map(|m| (0..n).map(|l| m[l * n..(l + 1) * n].iter().map(|&v| v as i64).collect()).collect())
                    .collect(),
            };
            let module = validate_module(ring, &data).expect("search enforces the module law");
            if module.is_irreducible() {
                found.push(module.canonical()?);
            }
        }
    }
    found.sort_by(|a, b| (a.rank, &a.action).cmp(&(b.rank, &b.action)));
    found.dedup_by(|a, b| a.action == b.action);
    Ok(found)
}

/// Irreducible modules filtered further by indecomposability.
pub fn enumerate_indecomposable_irreducible_modules(
    cert: &WeakBasedCertificate,
    mode: SearchMode,
) -> Result<Vec<ValidatedModule>, ZModError> {
    Ok(enumerate_irreducible_modules(cert, mode)?.into_iter().filter(ValidatedModule::is_indecomposable).collect())
}

/// Row-by-row backtracking. Row 0 has the minimal `F`-row sum `f_0` where
/// `F = sum_i A_i`. Irreducible modules
/// satisfy `F^2 <= N F` entrywise, hence `F > 0` entrywise, which is enforced.
struct ModuleSearch<'a> {
    ring: &'a ValidatedRing,
    n: usize,
    f0_cap: u64,
    budget: u64,
    act: Vec<Vec<u64>>,
    f: Vec<u64>,
    results: Vec<Vec<Vec<u64>>>,
}

impl<'a> ModuleSearch<'a> {
    fn new(ring: &'a ValidatedRing, n: usize, f0_cap: u64, budget: u64) -> Self {
        let r = ring.rank();
        ModuleSearch { ring, n, f0_cap, budget, act: vec![vec![0; n * n]; r], f: vec![0; n], results: Vec::new() }
    }

    fn big_f(&self, l: usize, k: usize) -> u64 {
        self.act.iter().map(|m| m[l * self.n + k]).sum()
    }

    fn row(&mut self, l: usize) {
        let n = self.n;
        if l == n {
            self.results.push(self.act.clone());
            return;
        }
        let r = self.ring.rank();
        let (f_min, f_max) = if l == 0 {
            (n as u64, self.f0_cap.min(isqrt(self.budget)))
        } else {
            // budget >= sum_j F_{0j} f_j with f_j >= f_0 for unfilled j > l
            let known: u64 = (0..l).map(|j| self.big_f(0, j) * self.f[j]).sum();
            let later: u64 = (l + 1..n).map(|j| self.big_f(0, j) * self.f[0]).sum();
            let lo = self.f[0].max(n as u64);
            (lo, self.budget.saturating_sub(known + later) / self.big_f(0, l).max(1))
        };
        if f_min > f_max {
            return;
        }
        // Filled rows l' with (A_i')_{l'l} = v > 0 give
        // v (A_i)_{lk} + sum_{m > l} (A_i')_{l'm} (A_i)_{mk} = rhs - sum_{m < l} (A_i')_{l'm} (A_i)_{mk},
        // a cap on (A_i)_{lk}, and its exact value when no m > l contributes.
        let mut cap = vec![f_max; r * n];
        let mut low = vec![0u64; r * n];
        for lp in 0..l {
            for ip in 0..r {
                let v = self.act[ip][lp * n + l];
                if v == 0 {
                    continue;
                }
                let exact = (l + 1..n).all(|m| self.act[ip][lp * n + m] == 0);
                for i in 0..r {
                    for k in 0..n {
                        let rhs: u64 = (0..r).map(|m| self.ring.c(ip, i, m) * self.act[m][lp * n + k]).sum();
                        let known: u64 = (0..l).map(|m| self.act[ip][lp * n + m] * self.act[i][m * n + k]).sum();
                        if known > rhs {
                            return;
                        }
                        let rest = rhs - known;
                        let idx = i * n + k;
                        cap[idx] = cap[idx].min(rest / v);
                        if exact {
                            if rest % v != 0 {
                                return;
                            }
                            low[idx] = low[idx].max(rest / v);
                        }
                    }
                }
            }
        }
        // Unit: sum_{i in I0} a^i (A_i)_{l,.} = e_l.
        for &i in self.ring.i0_set() {
            for k in 0..n {
                let c = &mut cap[i * n + k];
                *c = (*c).min(u64::from(k == l));
            }
        }
        if (0..r * n).any(|x| low[x] > cap[x]) || low.iter().sum::<u64>() > f_max {
            return;
        }
        // Cells are visited column by column: position p is (k, i) = (p / r, p % r).
        let at = |p: usize| (p % r) * n + p / r;
        let low_rest: Vec<u64> = (0..=r * n).map(|p| (p..r * n).map(|q| low[at(q)]).sum::<u64>()).collect();
        self.cells(l, 0, 0, f_min, f_max, &cap, &low, &low_rest);
    }

    #[allow(clippy::too_many_arguments)]
    fn cells(&mut self, l: usize, idx: usize, sum: u64, f_min: u64, f_max: u64, cap: &[u64], low: &[u64], low_rest: &[u64]) {
        let n = self.n;
        let r = self.ring.rank();
        if idx == r * n {
            if sum < f_min || !self.row_ok(l) {
                return;
            }
            self.f[l] = sum;
            self.row(l + 1);
            return;
        }
        let (k, i) = (idx / r, idx % r);
        let cell = i * n + k;
        // leave room for the forced minimum of later cells
        let room = f_max - sum;
        let reserved = low_rest[idx + 1];
        if reserved > room {
            return;
        }
        let hi = cap[cell].min(room - reserved);
        for v in low[cell]..=hi {
            self.act[i][l * n + k] = v;
            if l == 0 && k >= 2 && self.column_prefix_exceeds(k, i) {
                break;
            }
            self.cells(l, idx + 1, sum + v, f_min, f_max, cap, low, low_rest);
        }
        self.act[i][l * n + k] = 0;
    }

    /// Row 0 lists its columns `1..n` in non-increasing lexicographic order (the other
    /// basis vectors may be permuted freely). True if column `k` already exceeds column
    /// `k - 1` on entries `0..=i`.
    fn column_prefix_exceeds(&self, k: usize, i: usize) -> bool {
        for x in 0..=i {
            let (cur, prev) = (self.act[x][k], self.act[x][k - 1]);
            if cur != prev {
                return cur > prev;
            }
        }
        false
    }

    /// Checks once row `l` is complete: positivity of `F`, the unit, and the module
    /// law on every filled row (equality where the needed rows are all filled).
    fn row_ok(&self, l: usize) -> bool {
        let n = self.n;
        let r = self.ring.rank();
        if (0..n).any(|k| self.big_f(l, k) == 0) {
            return false;
        }
        let unit: u64 =
            self.ring.i0_set().iter().map(|&i| self.ring.unit_coeffs()[i] as u64 * self.act[i][l * n + l]).sum();
        if unit != 1 {
            return false;
        }
        for lp in 0..=l {
            for i in 0..r {
                let complete = (l + 1..n).all(|m| self.act[i][lp * n + m] == 0);
                for j in 0..r {
                    for k in 0..n {
                        let lhs: u64 = (0..=l).map(|m| self.act[i][lp * n + m] * self.act[j][m * n + k]).sum();
                        let rhs: u64 = (0..r).map(|m| self.ring.c(i, j, m) * self.act[m][lp * n + k]).sum();
                        if lhs > rhs || (complete && lhs != rhs) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn isqrt(x: u64) -> u64 {
    let mut s = (x as f64).sqrt() as u64;
    while s * s > x {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= x {
        s += 1;
    }
    s
}

/// A homomorphism of weak based rings: `f(b_i) = sum_j matrix[i][j] d_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RingHom {
    pub matrix: Vec<Vec<u64>>,
}

/// All homomorphisms `source -> target` preserving unit and involution, sorted.
pub fn enumerate_ring_homs(
    source: &WeakBasedCertificate,
    target: &WeakBasedCertificate,
    mode: SearchMode,
) -> Result<Vec<RingHom>, ZModError> {
    for cert in [source, target] {
        if cert.rank() > MAX_ENUMERATION_RING_RANK {
            return Err(ZModError::RankGuardExceeded(cert.rank(), MAX_ENUMERATION_RING_RANK));
        }
    }
    let bounds = EnumerationBounds::from_ring(&source.ring);
    if bounds.n > MAX_BOUND_N {
        return Err(ZModError::BoundTooLarge(bounds.n, MAX_BOUND_N));
    }
    // The bound argument gives sum_j g^j <= |J| N for g^j = sum_i g_i^j, hence the
    // per-entry cap |J| N as well.
    let cap = bounds.coeff_bound_hom(target.rank());
    let cap = if mode == SearchMode::Widened { 2 * cap } else { cap };
    let mut search = HomSearch {
        src: source,
        tgt: target,
        cap,
        g: vec![vec![0; target.rank()]; source.rank()],
        assigned: vec![false; source.rank()],
        results: Vec::new(),
    };
    search.assign(0, 0);
    let mut out: Vec<RingHom> = search.results.into_iter().map(|matrix| RingHom { matrix }).collect();
    out.sort();
    Ok(out)
}

struct HomSearch<'a> {
    src: &'a WeakBasedCertificate,
    tgt: &'a WeakBasedCertificate,
    cap: u64,
    g: Vec<Vec<u64>>,
    assigned: Vec<bool>,
    results: Vec<Vec<Vec<u64>>>,
}

impl HomSearch<'_> {
    fn assign(&mut self, i: usize, total: u64) {
        let ri = self.src.rank();
        if i == ri {
            if self.complete_ok() {
                self.results.push(self.g.clone());
            }
            return;
        }
        let inv_s = self.src.involution();
        let inv_t = self.tgt.involution();
        let partner = inv_s[i];
        if partner < i {
            // Forced by involution: g_i^j = g_{i*}^{j*}.
            let row: Vec<u64> = (0..self.tgt.rank()).map(|j| self.g[partner][inv_t[j]]).collect();
            let s: u64 = row.iter().sum();
            self.g[i] = row;
            self.assigned[i] = true;
            if total + s <= self.cap && self.partial_ok(i) {
                self.assign(i + 1, total + s);
            }
            self.assigned[i] = false;
            return;
        }
        self.row_cells(i, 0, total);
    }

    fn row_cells(&mut self, i: usize, j: usize, total: u64) {
        let rj = self.tgt.rank();
        if j == rj {
            if self.src.involution()[i] == i {
                let inv_t = self.tgt.involution();
                if (0..rj).any(|x| self.g[i][x] != self.g[i][inv_t[x]]) {
                    return;
                }
            }
            self.assigned[i] = true;
            if self.partial_ok(i) {
                self.assign(i + 1, total);
            }
            self.assigned[i] = false;
            return;
        }
        for v in 0..=(self.cap - total) {
            self.g[i][j] = v;
            self.row_cells(i, j + 1, total + v);
        }
        self.g[i][j] = 0;
    }

    fn image_product(&self, a: usize, b: usize) -> Vec<u64> {
        let rj = self.tgt.rank();
        let mut out = vec![0u64; rj];
        for x in 0..rj {
            for y in 0..rj {
                let s = self.g[a][x] * self.g[b][y];
                if s == 0 {
                    continue;
                }
                for (z, o) in out.iter_mut().enumerate() {
                    *o += s * self.tgt.ring.c(x, y, z);
                }
            }
        }
        out
    }

    /// `f(b_a) f(b_b) = sum_k c_{ab}^k f(b_k)` on assigned rows; with unassigned `k`
    /// only the inequality `known rhs <= lhs` can be checked.
    fn partial_ok(&self, newest: usize) -> bool {
        let ri = self.src.rank();
        let rj = self.tgt.rank();
        for a in 0..ri {
            for b in 0..ri {
                if !(self.assigned[a] && self.assigned[b]) || (a != newest && b != newest) {
                    continue;
                }
                let lhs = self.image_product(a, b);
                let complete = (0..ri).all(|k| self.assigned[k] || self.src.ring.c(a, b, k) == 0);
                for (z, &l) in lhs.iter().enumerate().take(rj) {
                    let rhs: u64 = (0..ri).filter(|&k| self.assigned[k]).map(|k| self.src.ring.c(a, b, k) * self.g[k][z]).sum();
                    if rhs > l || (complete && rhs != l) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn complete_ok(&self) -> bool {
        let ri = self.src.rank();
        let rj = self.tgt.rank();
        let unit_ok = (0..rj).all(|j| {
            let s: u64 = (0..ri).map(|i| self.src.ring.unit_coeffs()[i] as u64 * self.g[i][j]).sum();
            s == self.tgt.ring.unit_coeffs()[j] as u64
        });
        unit_ok && (0..ri).all(|a| (0..ri).all(|b| {
            let lhs = self.image_product(a, b);
            (0..rj).all(|z| lhs[z] == (0..ri).map(|k| self.src.ring.c(a, b, k) * self.g[k][z]).sum::<u64>())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::based_ring::{fibonacci_ring, group_ring, validate_zplus_ring, BasedRingData};

    fn cert(d: BasedRingData) -> WeakBasedCertificate {
        certificate_for(&validate_zplus_ring(d).unwrap()).unwrap()
    }

    fn integers() -> WeakBasedCertificate {
        cert(group_ring(&[1]).unwrap())
    }

    fn module(ring: &ValidatedRing, action: Vec<Vec<Vec<i64>>>) -> Result<ValidatedModule, ZModError> {
        validate_module(ring, &ZPlusModuleData { rank: action[0].len(), action })
    }

    #[test]
    fn validation_examples() {
        let z2 = validate_zplus_ring(group_ring(&[2]).unwrap()).unwrap();
        let reg = module(&z2, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]]).unwrap();
        assert!(reg.is_irreducible() && reg.is_indecomposable());
        let triv = module(&z2, vec![vec![vec![1]], vec![vec![1]]]).unwrap();
        assert!(triv.is_irreducible() && triv.is_indecomposable());
        let fib = validate_zplus_ring(fibonacci_ring()).unwrap();
        assert_eq!(module(&fib, vec![vec![vec![1]], vec![vec![1]]]), Err(ZModError::ActionLawFails(1, 1)));
        let bad_unit = module(&z2, vec![vec![vec![0]], vec![vec![1]]]);
        assert!(bad_unit.is_err());
        let sum = module(&z2, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert!(!sum.is_irreducible() && !sum.is_indecomposable());
    }

    #[test]
    fn regular_z3_is_irreducible() {
        let z3 = validate_zplus_ring(group_ring(&[3]).unwrap()).unwrap();
        let perm = |s: usize| -> Vec<Vec<i64>> { (0..3).map(|l| (0..3).map(|k| i64::from((l + s) % 3 == k)).collect()).collect() };
        let reg = module(&z3, vec![perm(0), perm(1), perm(2)]).unwrap();
        assert!(reg.is_irreducible());
    }

    #[test]
    fn block_sum_is_decomposable() {
        let z2 = validate_zplus_ring(group_ring(&[2]).unwrap()).unwrap();
        let m = module(
            &z2,
            vec![
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
            ],
        )
        .unwrap();
        assert!(!m.is_indecomposable());
    }

    #[test]
    fn module_enumeration_examples() {
        let ranks = |c: &WeakBasedCertificate| -> Vec<usize> {
            enumerate_irreducible_modules(c, SearchMode::Proven).unwrap().iter().map(ValidatedModule::rank).collect()
        };
        assert_eq!(ranks(&cert(group_ring(&[2]).unwrap())), vec![1, 2]);
        assert_eq!(ranks(&cert(fibonacci_ring())), vec![2]);
        assert_eq!(ranks(&cert(group_ring(&[3]).unwrap())), vec![1, 3]);
    }

    #[test]
    fn bounds() {
        let b = EnumerationBounds::from_ring(&cert(fibonacci_ring()).ring);
        assert_eq!(b.n, 3);
        assert_eq!(b.coeff_budget_module, 9);
        assert_eq!(b.coeff_bound_hom(2), 6);
    }

    #[test]
    fn hom_enumeration_examples() {
        let z2 = cert(group_ring(&[2]).unwrap());
        let homs = enumerate_ring_homs(&z2, &z2, SearchMode::Proven).unwrap();
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[0].matrix, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(homs[1].matrix, vec![vec![1, 0], vec![1, 0]]);
        assert!(enumerate_ring_homs(&cert(fibonacci_ring()), &integers(), SearchMode::Proven).unwrap().is_empty());
        let z3 = cert(group_ring(&[3]).unwrap());
        assert_eq!(enumerate_ring_homs(&z3, &integers(), SearchMode::Proven).unwrap().len(), 1);
    }
}
