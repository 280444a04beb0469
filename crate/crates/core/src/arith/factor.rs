//! Factorization of univariate polynomials over `Q`: squarefree decomposition,
//! Berlekamp modulo a small prime, Hensel lifting and subset recombination.
//! Intended for the small degrees met when splitting algebras; no lattice reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::field::{invmod, is_prime, mulmod};
use super::{FieldTag, Poly};

/// Monic irreducible factors of a nonzero rational polynomial, with multiplicities,
/// sorted by (degree, coefficients).
pub fn factor_rational(f: &Poly) -> Vec<(Poly, usize)> {
    assert_eq!(f.field(), FieldTag::Rational);
    assert!(!f.is_zero());
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        for g in factor_squarefree(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Yun's algorithm: `f = prod a_i^i` with the `a_i` squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.divrem(&a0).0;
    let c = df.divrem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.divrem(&a).0;
        let c = d.divrem(&a).0;
        d = c.sub(&b.derivative());
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn factor_squarefree(g: &Poly) -> Vec<Poly> {
    let n = g.degree().unwrap();
    if n <= 1 {
        return vec![g.clone()];
    }
    let coeffs: Vec<BigRational> = g.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // h(x) = den^n g(x / den) is monic with integer coefficients.
    let h: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| (c * BigRational::from_integer(num_traits::pow(den.clone(), n - k))).to_integer())
        .collect();
    zassenhaus(&h)
        .into_iter()
        .map(|phi| {
            let d = phi.len() - 1;
            let cs = phi
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let q = BigRational::new(c.clone(), num_traits::pow(den.clone(), d - k));
                    FieldTag::Rational.from_rational(&q).unwrap()
                })
                .collect();
            Poly::new(FieldTag::Rational, cs)
        })
        .collect()
}

// ---- integer polynomials (lowest degree first) ----

fn ztrim(a: &mut Vec<BigInt>) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial; `None` if the remainder is nonzero.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return None;
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k - db + i] -= &c * bi;
        }
        quot[k - db] = c;
    }
    ztrim(&mut rem);
    rem.is_empty().then_some(quot)
}

fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

// ---- polynomials over F_p with small p ----

type Zp = Vec<u64>;

fn ptrim(a: &mut Zp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn to_zp(a: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    let mut v: Zp = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    ptrim(&mut v);
    v
}

fn padd(a: &[u64], b: &[u64], p: u64) -> Zp {
    let n = a.len().max(b.len());
    let mut v: Zp = (0..n).map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p).collect();
    ptrim(&mut v);
    v
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Zp {
    let n = a.len().max(b.len());
    let mut v: Zp = (0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect();
    ptrim(&mut v);
    v
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + mulmod(x, y, p)) % p;
        }
    }
    ptrim(&mut v);
    v
}

fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (Zp, Zp) {
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = mulmod(rem[k], inv, p);
        if c == 0 {
            continue;
        }
        for (i, &bi) in b.iter().enumerate() {
            rem[k - db + i] = (rem[k - db + i] + p - mulmod(c, bi, p)) % p;
        }
        quot[k - db] = c;
    }
    ptrim(&mut rem);
    ptrim(&mut quot);
    (quot, rem)
}

fn pmonic(a: &[u64], p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = invmod(l, p);
            a.iter().map(|&c| mulmod(c, inv, p)).collect()
        }
    }
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Zp {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = pdivrem(&x, &y, p).1;
        x = std::mem::replace(&mut y, r);
    }
    pmonic(&x, p)
}

/// `(g, s, t)` with `s a + t b = g` monic.
fn pxgcd(a: &[u64], b: &[u64], p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1, p);
        let s2 = psub(&s0, &pmul(&q, &s1, p), p);
        let t2 = psub(&t0, &pmul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = invmod(*r0.last().unwrap(), p);
    let sc = |v: &Zp| -> Zp { v.iter().map(|&c| mulmod(c, inv, p)).collect() };
    (sc(&r0), sc(&s0), sc(&t0))
}

fn pderiv(a: &[u64], p: u64) -> Zp {
    let mut v: Zp = a.iter().enumerate().skip(1).map(|(k, &c)| mulmod(c, k as u64 % p, p)).collect();
    ptrim(&mut v);
    v
}

/// Basis of `{v : m v = 0}` over `F_p` for a dense row-major matrix.
fn nullspace_mod_p(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Zp> {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(sel) = (row..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, sel);
        let inv = invmod(a[row][col], p);
        for c in 0..cols {
            a[row][c] = mulmod(a[row][c], inv, p);
        }
        for r in 0..a.len() {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..cols {
                    a[r][c] = (a[r][c] + p - mulmod(f, a[row][c], p)) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[i][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp factorization of a monic squarefree polynomial over a small prime field.
fn berlekamp(f: &[u64], p: u64) -> Vec<Zp> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Row i holds x^(i p) mod f.
    let xp = {
        let mut base = vec![0u64, 1];
        let mut acc = vec![1u64];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = pdivrem(&pmul(&acc, &base, p), f, p).1;
            }
            base = pdivrem(&pmul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut qrows = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        qrows.push(row);
        cur = pdivrem(&pmul(&cur, &xp, p), f, p).1;
    }
    // v (Q - I) = 0  <=>  (Q - I)^T v = 0
    let mt: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| (qrows[i][j] + if i == j { p - 1 } else { 0 }) % p).collect())
        .collect();
    let kernel = nullspace_mod_p(&mt, n, p);
    let r = kernel.len();
    let mut factors = vec![f.to_vec()];
    for v in kernel {
        let mut v = v;
        ptrim(&mut v);
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let mut rest = u;
            for s in 0..p {
                if rest.len() <= 2 {
                    break;
                }
                let shifted = psub(&v, &[s], p);
                let g = pgcd(&rest, &shifted, p);
                if g.len() > 1 && g.len() < rest.len() {
                    rest = pdivrem(&rest, &g, p).0;
                    next.push(g);
                }
            }
            next.push(pmonic(&rest, p));
        }
        factors = next;
        if factors.len() == r {
            break;
        }
    }
    debug_assert_eq!(factors.len(), r);
    factors
}

/// Lift `f = g h (mod p)` to `f = G H (mod p^k)` with `G`, `H` monic.
fn hensel_pair(f: &[BigInt], g: &Zp, h: &Zp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = pxgcd(g, h, p);
    let lift = |v: &Zp| -> Vec<BigInt> { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut big_g = lift(g);
    let mut big_h = lift(h);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    for _ in 1..k {
        let gh = zmul(&big_g, &big_h);
        let n = f.len().max(gh.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default())
            .collect();
        let e: Vec<BigInt> = diff.iter().map(|c| c / &m).collect();
        let ep = to_zp(&e, p);
        let (q, dg) = pdivrem(&pmul(&t, &ep, p), g, p);
        let dh = padd(&pmul(&s, &ep, p), &pmul(&q, h, p), p);
        for (i, c) in dg.iter().enumerate() {
            big_g[i] += &m * BigInt::from(*c);
        }
        for (i, c) in dh.iter().enumerate() {
            big_h[i] += &m * BigInt::from(*c);
        }
        m *= &pb;
    }
    let reduce = |v: Vec<BigInt>| -> Vec<BigInt> { v.into_iter().map(|c| c.mod_floor(&m)).collect() };
    (reduce(big_g), reduce(big_h))
}

fn multi_lift(f: &[BigInt], factors: &[Zp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(k);
        return vec![f.iter().map(|c| c.mod_floor(&m)).collect()];
    }
    let g = &factors[0];
    let h = factors[1..].iter().fold(vec![1u64], |acc, u| pmul(&acc, u, p));
    let (big_g, big_h) = hensel_pair(f, g, &h, p, k);
    let mut out = vec![big_g];
    out.extend(multi_lift(&big_h, &factors[1..], p, k));
    out
}

const SMALL_PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Irreducible monic factors of a monic squarefree integer polynomial.
fn zassenhaus(h: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = h.len() - 1;
    if n <= 1 {
        return vec![h.to_vec()];
    }
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut good = 0;
    let candidates = SMALL_PRIMES.iter().copied().chain((101..).filter(|&q| is_prime(q)));
    for p in candidates {
        let hp = to_zp(h, p);
        if pgcd(&hp, &pderiv(&hp, p), p).len() != 1 {
            continue;
        }
        let fs = berlekamp(&hp, p);
        if fs.len() == 1 {
            return vec![h.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        good += 1;
        if good >= 6 {
            break;
        }
    }
    let (p, modular) = best.expect("a squarefree integer polynomial stays squarefree modulo most primes");

    let norm2: BigInt = h.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let mut k = 1u32;
    let mut m = BigInt::from(p);
    while m <= &bound * 2u32 {
        m *= p;
        k += 1;
    }
    let mut remaining = multi_lift(h, &modular, p, k);
    let mut f = h.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        for subset in Combinations::new(remaining.len(), size) {
            let prod = subset.iter().fold(vec![BigInt::one()], |acc, &i| {
                zmul(&acc, &remaining[i]).into_iter().map(|c| c.mod_floor(&m)).collect()
            });
            let cand: Vec<BigInt> = prod.iter().map(|c| symmetric_mod(c, &m)).collect();
            if !f[0].is_zero() && !cand[0].is_zero() && !(&f[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = zdiv_exact(&f, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                f = q;
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Roots in `F_p` of a polynomial that splits into distinct linear factors.
pub(crate) fn split_linear_roots(f: &Poly) -> Vec<u64> {
    let FieldTag::Prime(p) = f.field() else { panic!("prime field expected") };
    let coeffs: Zp = f
        .coeffs()
        .iter()
        .map(|c| match c {
            super::FieldElem::Prime { r, .. } => *r,
            _ => unreachable!(),
        })
        .collect();
    let mut roots = Vec::new();
    let mut stack = vec![pmonic(&coeffs, p)];
    while let Some(g) = stack.pop() {
        match g.len() {
            0 | 1 => {}
            2 => roots.push((p - g[0]) % p),
            _ if p == 2 => {
                for r in 0..2 {
                    let val = g.iter().rev().fold(0u64, |acc, &c| (mulmod(acc, r, p) + c) % p);
                    if val == 0 {
                        roots.push(r);
                    }
                }
            }
            _ => {
                // Equal-degree splitting with shifts x + a, a = 0, 1, 2, ...
                let mut split = false;
                for a in 0..p {
                    let base = vec![a, 1u64];
                    let mut acc = vec![1u64];
                    let mut b = base;
                    let mut e = (p - 1) / 2;
                    while e > 0 {
                        if e & 1 == 1 {
                            acc = pdivrem(&pmul(&acc, &b, p), &g, p).1;
                        }
                        b = pdivrem(&pmul(&b, &b, p), &g, p).1;
                        e >>= 1;
                    }
                    let d = pgcd(&g, &psub(&acc, &[1], p), p);
                    if d.len() > 1 && d.len() < g.len() {
                        let q = pmonic(&pdivrem(&g, &d, p).0, p);
                        stack.push(d);
                        stack.push(q);
                        split = true;
                        break;
                    }
                }
                assert!(split, "polynomial does not split into distinct linear factors");
            }
        }
    }
    roots.sort_unstable();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> Poly {
        Poly::new(FieldTag::Rational, c.iter().map(|&v| FieldTag::Rational.from_i64(v)).collect())
    }

    fn degrees(f: &Poly) -> Vec<(usize, usize)> {
        factor_rational(f).iter().map(|(g, m)| (g.degree().unwrap(), *m)).collect()
    }

    #[test]
    fn cyclotomic_factorizations() {
        assert_eq!(degrees(&qp(&[-1, 0, 0, 1])), vec![(1, 1), (2, 1)]);
        // x^12 - 1 = Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 Phi_12
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        assert_eq!(degrees(&qp(&c)), vec![(1, 1), (1, 1), (2, 1), (2, 1), (2, 1), (4, 1)]);
    }

    #[test]
    fn swinnerton_dyer_style_irreducible() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
        assert_eq!(degrees(&qp(&[1, 0, -10, 0, 1])), vec![(4, 1)]);
    }

    #[test]
    fn multiplicities_and_rational_coefficients() {
        // (x - 1/2)^2 (x^2 + 1)
        let half = FieldTag::Rational.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        let lin = Poly::linear(&half);
        let f = lin.mul(&lin).mul(&qp(&[1, 0, 1]));
        let fs = factor_rational(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], (lin, 2));
        assert_eq!(fs[1], (qp(&[1, 0, 1]), 1));
    }

    #[test]
    fn berlekamp_counts() {
        // x^4 + 1 over F_3 splits into two quadratics.
        assert_eq!(berlekamp(&[1, 0, 0, 0, 1], 3).len(), 2);
        // x^3 + x + 1 = (x - 1)(x^2 + x + 2) over F_3.
        assert_eq!(berlekamp(&[1, 1, 0, 1], 3).len(), 2);
    }

    #[test]
    fn linear_roots() {
        let f = FieldTag::Prime(7);
        let poly = Poly::linear(&f.from_i64(2)).mul(&Poly::linear(&f.from_i64(5))).mul(&Poly::linear(&f.from_i64(0)));
        assert_eq!(split_linear_roots(&poly), vec![0, 2, 5]);
    }
}
