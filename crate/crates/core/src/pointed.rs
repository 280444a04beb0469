//! Pointed fusion categories `Vect(G)` for finite abelian `G`: subgroup lattices,
//! `H^2(H; k^x)`, module-category classes, braidings on `Vect(Z/p)`, and square
//! classes of the rationals.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::is_prime;
use crate::field_profile::{FieldKind, FieldProfile};

pub const MAX_GROUP_ORDER: u64 = 512;
pub const MAX_SUBGROUPS: usize = 200_000;
pub const MAX_SQUARE_CLASS_BOUND: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointedError {
    #[error("invalid invariant factors {0:?}: each must be at least 2 and divide the next")]
    BadInvariantFactors(Vec<u64>),
    #[error("cyclic order must be positive")]
    ZeroOrder,
    #[error("group order {0} exceeds the limit {1}")]
    OrderGuardExceeded(u128, u64),
    #[error("more than {0} subgroups")]
    SubgroupBudgetExceeded(usize),
    #[error("H^2 over {field} is not supported for the group {group:?}")]
    UnsupportedFieldGroupPair { field: String, group: Vec<u64> },
    #[error("field {0} is not supported; an algebraically closed field is required")]
    UnsupportedField(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error("bound {0} exceeds the limit {1}")]
    BoundTooLarge(u64, u64),
}

/// `Z/n_1 x ... x Z/n_k` with `n_i | n_{i+1}`. Elements are indexed in mixed radix
/// with the first factor varying fastest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FiniteAbelianGroup {
    type Error = PointedError;
    fn try_from(v: Vec<u64>) -> Result<Self, PointedError> {
        FiniteAbelianGroup::new(v)
    }
}

impl From<FiniteAbelianGroup> for Vec<u64> {
    fn from(g: FiniteAbelianGroup) -> Vec<u64> {
        g.cyclic_orders
    }
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors from exponent lists per prime.
fn from_prime_exponents(parts: BTreeMap<u64, Vec<u32>>) -> Vec<u64> {
    let len = parts.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, mut exps) in parts {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (j, e) in exps.into_iter().enumerate() {
            factors[len - 1 - j] *= p.pow(e);
        }
    }
    factors
}

impl FiniteAbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self, PointedError> {
        let ok = cyclic_orders.iter().all(|&n| n >= 2) && cyclic_orders.windows(2).all(|w| w[1] % w[0] == 0);
        if !ok {
            return Err(PointedError::BadInvariantFactors(cyclic_orders));
        }
        Ok(FiniteAbelianGroup { cyclic_orders })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { cyclic_orders: Vec::new() }
    }

    /// Normal form of an arbitrary product of cyclic groups; factors equal to 1 are dropped.
    pub fn from_cyclic_factors(orders: &[u64]) -> Result<Self, PointedError> {
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                return Err(PointedError::ZeroOrder);
            }
            for (p, e) in prime_factors(n) {
                parts.entry(p).or_default().push(e);
            }
        }
        Ok(FiniteAbelianGroup { cyclic_orders: from_prime_exponents(parts) })
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> u128 {
        self.cyclic_orders.iter().map(|&n| u128::from(n)).product()
    }

    pub fn exponent(&self) -> u64 {
        self.cyclic_orders.last().copied().unwrap_or(1)
    }

    fn guarded_order(&self) -> Result<usize, PointedError> {
        let n = self.order();
        if n > u128::from(MAX_GROUP_ORDER) {
            return Err(PointedError::OrderGuardExceeded(n, MAX_GROUP_ORDER));
        }
        Ok(n as usize)
    }

    pub fn coords(&self, mut idx: usize) -> Vec<u64> {
        self.cyclic_orders
            .iter()
            .map(|&m| {
                let r = idx as u64 % m;
                idx /= m as usize;
                r
            })
            .collect()
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        coords.iter().zip(&self.cyclic_orders).rev().fold(0, |acc, (&v, &m)| acc * m as usize + (v % m) as usize)
    }

    /// Sum of two elements given by index.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let s: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        self.index(&s)
    }

    pub fn element_order(&self, idx: usize) -> u64 {
        self.coords(idx)
            .iter()
            .zip(&self.cyclic_orders)
            .map(|(&c, &m)| m / num_integer::gcd(c, m))
            .fold(1, num_integer::lcm)
    }
}

impl std::fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.cyclic_orders.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.cyclic_orders.iter().map(|n| format!("Z/{n}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// A subgroup of an ambient group, with generators in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    pub order: u64,
    pub elements: Vec<usize>,
    pub generators: Vec<Vec<u64>>,
    pub structure: FiniteAbelianGroup,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                out.push(w * 64 + x.trailing_zeros() as usize);
                x &= x - 1;
            }
        }
        out
    }
}

struct GroupTable {
    n: usize,
    add: Vec<usize>,
    orders: Vec<u64>,
}

impl GroupTable {
    fn new(g: &FiniteAbelianGroup, n: usize) -> Self {
        let mut add = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = g.add(a, b);
            }
        }
        GroupTable { n, add, orders: (0..n).map(|i| g.element_order(i)).collect() }
    }

    /// Subgroup generated by `s` (a subgroup) and the element `g`.
    fn join(&self, s: &Bits, g: usize) -> Bits {
        let members = s.ones();
        let mut out = s.clone();
        let mut shift = g;
        while !s.get(shift) {
            for &m in &members {
                out.set(self.add[m * self.n + shift]);
            }
            shift = self.add[shift * self.n + g];
        }
        out
    }

    fn structure(&self, members: &[usize]) -> FiniteAbelianGroup {
        let order = members.len() as u64;
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (p, e) in prime_factors(order) {
            // |H[p^k]| = p^(sum_i min(k, e_i)); successive differences count factors with e_i >= k.
            let log_count = |k: u32| -> u32 {
                let c = members.iter().filter(|&&h| p.pow(k) % self.orders[h] == 0).count() as u64;
                let mut l = 0;
                let mut c = c;
                while c > 1 {
                    c /= p;
                    l += 1;
                }
                l
            };
            let at_least: Vec<u32> = (1..=e).map(|k| log_count(k) - log_count(k - 1)).collect();
            let count = at_least[0] as usize;
            let exps: Vec<u32> = (0..count).map(|i| at_least.iter().filter(|&&c| c as usize > i).count() as u32).collect();
            parts.insert(p, exps);
        }
        FiniteAbelianGroup { cyclic_orders: from_prime_exponents(parts) }
    }
}

/// All subgroups ordered by `(order, sorted element indices)`.
pub fn subgroups(g: &FiniteAbelianGroup) -> Result<Vec<Subgroup>, PointedError> {
    let n = g.guarded_order()?;
    let table = GroupTable::new(g, n);
    let mut trivial = Bits::new(n);
    trivial.set(0);
    let mut cyclic: Vec<(usize, Bits)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in 1..n {
        let c = table.join(&trivial, x);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut found: HashSet<Bits> = HashSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(s) = frontier.pop() {
        for (x, c) in &cyclic {
            if c.is_subset(&s) {
                continue;
            }
            let t = table.join(&s, *x);
            if !found.contains(&t) {
                if found.len() >= MAX_SUBGROUPS {
                    return Err(PointedError::SubgroupBudgetExceeded(MAX_SUBGROUPS));
                }
                found.insert(t.clone());
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|bits| {
            let elements = bits.ones();
            // Greedy generators, largest element order first.
            let mut cand = elements.clone();
            cand.sort_by_key(|&e| (std::cmp::Reverse(table.orders[e]), e));
            let mut span = Bits::new(n);
            span.set(0);
            let mut generators = Vec::new();
            for e in cand {
                if !span.get(e) {
                    span = table.join(&span, e);
                    generators.push(g.coords(e));
                }
            }
            Subgroup { order: elements.len() as u64, structure: table.structure(&elements), elements, generators }
        })
        .collect();
    out.sort_by(|a, b| (a.order, &a.elements).cmp(&(b.order, &b.elements)));
    Ok(out)
}

/// `H^2(H; k^x)` as an abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum H2Group {
    Finite { factors: Vec<u64>, order: u64 },
    /// `Q^x / (Q^x)^2`.
    InfiniteSquareClassGroup,
}

impl H2Group {
    pub fn class_count(&self) -> Option<u64> {
        match self {
            H2Group::Finite { order, .. } => Some(*order),
            H2Group::InfiniteSquareClassGroup => None,
        }
    }
}

fn strip_prime(mut n: u64, p: u64) -> u64 {
    if p >= 2 {
        while n % p == 0 {
            n /= p;
        }
    }
    n
}

/// `H^2` of `H` with coefficients in `k^x`: the exterior square of `H` over an algebraically
/// closed field (with `p`-parts removed in characteristic `p`), or the square-class group
/// for `Z/2` over the rationals.
pub fn h2_of_abelian(h: &FiniteAbelianGroup, field: &FieldProfile) -> Result<H2Group, PointedError> {
    match field.kind() {
        FieldKind::AlgClosed(c) => {
            let n = &h.cyclic_orders;
            let mut factors = Vec::new();
            for i in 0..n.len() {
                for j in i + 1..n.len() {
                    let d = strip_prime(num_integer::gcd(n[i], n[j]), *c);
                    if d > 1 {
                        factors.push(d);
                    }
                }
            }
            let normal = FiniteAbelianGroup::from_cyclic_factors(&factors)?;
            let order = normal.cyclic_orders.iter().product();
            Ok(H2Group::Finite { factors: normal.cyclic_orders, order })
        }
        FieldKind::Rationals if h.cyclic_orders == [2] => Ok(H2Group::InfiniteSquareClassGroup),
        _ => Err(PointedError::UnsupportedFieldGroupPair { field: field.to_string(), group: h.cyclic_orders.clone() }),
    }
}

/// Indecomposable module category over `Vect(G)`: a subgroup with a class in `H^2(H; k^x)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ModuleClass {
    pub subgroup: Subgroup,
    pub cocycle_class_index: u64,
    pub separable: bool,
}

pub fn module_classes(g: &FiniteAbelianGroup, field: &FieldProfile) -> Result<Vec<ModuleClass>, PointedError> {
    let FieldKind::AlgClosed(c) = field.kind() else {
        return Err(PointedError::UnsupportedField(field.to_string()));
    };
    let mut out = Vec::new();
    for s in subgroups(g)? {
        let count = h2_of_abelian(&s.structure, field)?.class_count().expect("finite over closed fields");
        let separable = *c == 0 || s.order % c != 0;
        for idx in 0..count {
            out.push(ModuleClass { subgroup: s.clone(), cocycle_class_index: idx, separable });
        }
    }
    Ok(out)
}

/// Braiding on `Vect(Z/p)` given by `b(1, 1) = zeta_p^zeta_exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BraidingParam {
    pub p: u64,
    pub zeta_exponent: u64,
}

pub fn braidings_on_cyclic(p: u64, field: &FieldProfile) -> Result<Vec<BraidingParam>, PointedError> {
    if !is_prime(p) {
        return Err(PointedError::NotPrime(p));
    }
    let FieldKind::AlgClosed(c) = field.kind() else {
        return Err(PointedError::UnsupportedField(field.to_string()));
    };
    // In characteristic p the only p-th root of unity is 1.
    let count = if *c == p { 1 } else { p };
    Ok((0..count).map(|zeta_exponent| BraidingParam { p, zeta_exponent }).collect())
}

/// Squarefree integers in `[1, bound]`; each is a distinct class in `Q^x / (Q^x)^2`.
pub fn square_class_witnesses(bound: u64) -> Result<Vec<u64>, PointedError> {
    if bound == 0 {
        return Err(PointedError::ZeroBound);
    }
    if bound > MAX_SQUARE_CLASS_BOUND {
        return Err(PointedError::BoundTooLarge(bound, MAX_SQUARE_CLASS_BOUND));
    }
    let b = bound as usize;
    let mut squarefree = vec![true; b + 1];
    let mut d = 2;
    while d * d <= b {
        for m in (d * d..=b).step_by(d * d) {
            squarefree[m] = false;
        }
        d += 1;
    }
    Ok((1..=b).filter(|&m| squarefree[m]).map(|m| m as u64).collect())
}
