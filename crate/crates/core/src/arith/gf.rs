//! Finite fields `F_{p^q}` as `F_p[t]/(g)` and polynomials over them.

use super::{addmod, invmod, mulmod};

/// Dense polynomial over `F_p`, lowest degree first, no trailing zeros.
pub(crate) type FpPoly = Vec<u64>;

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| addmod(*a.get(i).unwrap_or(&0), p - b.get(i).unwrap_or(&0) % p, p)).collect())
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addmod(out[i + j], mulmod(x, y, p), p);
        }
    }
    trim(out)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = mulmod(r[r.len() - 1], inv, p);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = addmod(r[shift + j], p - mulmod(c, bj, p), p);
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    fp_divrem(a, b, p).1
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = invmod(lead, p);
        a.iter_mut().for_each(|c| *c = mulmod(*c, inv, p));
    }
    a
}

/// `base^e mod m` over `F_p`.
fn fp_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> FpPoly {
    let mut result = vec![1];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = fp_rem(&fp_mul(&result, &b, p), m, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    fp_rem(&result, m, p)
}

/// `x^(p^k) mod f` by `k` successive `p`-th powers.
fn frobenius_iterate(f: &[u64], k: u32, p: u64) -> FpPoly {
    let mut h = fp_rem(&[0, 1], f, p);
    for _ in 0..k {
        h = fp_powmod(&h, u128::from(p), f, p);
    }
    h
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic `f` of degree `n >= 1` over `F_p`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = (f.len() - 1) as u32;
    if n == 1 {
        return true;
    }
    let x: FpPoly = vec![0, 1];
    if frobenius_iterate(f, n, p) != fp_rem(&x, f, p) {
        return false;
    }
    prime_divisors(n).into_iter().all(|t| {
        let h = frobenius_iterate(f, n / t, p);
        fp_gcd(&fp_sub(&h, &x, p), f, p) == [1]
    })
}

/// Least monic irreducible of degree `n` over `F_p`, ordering coefficient vectors by
/// their base-`p` value.
pub(crate) fn first_irreducible(p: u64, n: u32) -> FpPoly {
    let mut counter: u128 = 0;
    loop {
        let mut f = Vec::with_capacity(n as usize + 1);
        let mut c = counter;
        for _ in 0..n {
            f.push((c % u128::from(p)) as u64);
            c /= u128::from(p);
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        counter += 1;
    }
}

/// `F_{p^q} = F_p[t]/(modulus)`; elements are coefficient vectors of length `q`.
#[derive(Clone, Debug)]
pub(crate) struct Gf {
    p: u64,
    modulus: FpPoly,
}

pub(crate) type GfElem = Vec<u64>;

impl Gf {
    pub(crate) fn new(p: u64, q: u32) -> Self {
        Gf { p, modulus: first_irreducible(p, q) }
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn pad(&self, mut a: FpPoly) -> GfElem {
        a.resize(self.degree(), 0);
        a
    }

    pub(crate) fn zero(&self) -> GfElem {
        vec![0; self.degree()]
    }

    pub(crate) fn from_fp(&self, c: u64) -> GfElem {
        self.pad(trim(vec![c % self.p]))
    }

    fn is_zero(a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &[u64], b: &[u64]) -> GfElem {
        a.iter().zip(b).map(|(&x, &y)| addmod(x, y, self.p)).collect()
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> GfElem {
        a.iter().zip(b).map(|(&x, &y)| addmod(x, self.p - y, self.p)).collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> GfElem {
        self.pad(fp_rem(&fp_mul(&trim(a.to_vec()), &trim(b.to_vec()), self.p), &self.modulus, self.p))
    }

    /// Inverse of a nonzero element via the extended Euclidean algorithm.
    fn inv(&self, a: &[u64]) -> GfElem {
        let p = self.p;
        let (mut r0, mut r1) = (self.modulus.clone(), trim(a.to_vec()));
        let (mut s0, mut s1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = fp_divrem(&r0, &r1, p);
            let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = invmod(r0[0], p);
        self.pad(trim(s0.iter().map(|&x| mulmod(x, c, p)).collect()))
    }

    /// Order of the field.
    fn size(&self) -> u128 {
        u128::from(self.p).pow(self.degree() as u32)
    }
}

/// Polynomial over `F_{p^q}`, lowest degree first, no trailing zeros.
type GfPoly = Vec<GfElem>;

fn g_trim(mut a: GfPoly) -> GfPoly {
    while a.last().is_some_and(|c| Gf::is_zero(c)) {
        a.pop();
    }
    a
}

fn g_mul(k: &Gf, a: &[GfElem], b: &[GfElem]) -> GfPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    g_trim(out)
}

fn g_divrem(k: &Gf, a: &[GfElem], b: &[GfElem]) -> (GfPoly, GfPoly) {
    let mut r = g_trim(a.to_vec());
    let db = b.len() - 1;
    let inv = k.inv(&b[db]);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![k.zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = k.mul(&r[r.len() - 1], &inv);
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = k.sub(&r[shift + j], &k.mul(&c, bj));
        }
        q[shift] = c;
        r = g_trim(r);
    }
    (g_trim(q), r)
}

fn g_monic(k: &Gf, a: GfPoly) -> GfPoly {
    match a.last() {
        Some(lead) => {
            let inv = k.inv(lead);
            a.iter().map(|c| k.mul(c, &inv)).collect()
        }
        None => a,
    }
}

fn g_gcd(k: &Gf, a: &[GfElem], b: &[GfElem]) -> GfPoly {
    let (mut a, mut b) = (g_trim(a.to_vec()), g_trim(b.to_vec()));
    while !b.is_empty() {
        let r = g_divrem(k, &a, &b).1;
        a = b;
        b = r;
    }
    g_monic(k, a)
}

fn g_powmod(k: &Gf, base: &[GfElem], mut e: u128, m: &[GfElem]) -> GfPoly {
    let mut result = vec![k.from_fp(1)];
    let mut b = g_divrem(k, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            result = g_divrem(k, &g_mul(k, &result, &b), m).1;
        }
        b = g_divrem(k, &g_mul(k, &b, &b), m).1;
        e >>= 1;
    }
    g_divrem(k, &result, m).1
}

/// Distinct-degree factorization of a squarefree monic `f` over `F_{p^q}`: pairs
/// `(d, number of irreducible factors of degree d)`.
pub(crate) fn distinct_degree_counts(k: &Gf, f: &[GfElem]) -> Vec<(usize, usize)> {
    let x = vec![k.zero(), k.from_fp(1)];
    let size = k.size();
    let mut rest = g_trim(f.to_vec());
    let mut h = g_divrem(k, &x, &rest).1;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            out.push((rest.len() - 1, 1));
            break;
        }
        h = g_powmod(k, &h, size, &rest);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), k.zero());
        diff[1] = k.sub(&diff[1], &k.from_fp(1));
        let g = g_gcd(k, &g_trim(diff), &rest);
        if g.len() > 1 {
            out.push((d, (g.len() - 1) / d));
            rest = g_divrem(k, &rest, &g).0;
            h = g_divrem(k, &h, &rest).1;
        }
        d += 1;
    }
    out
}

/// Embed a polynomial over `F_p` into one over `F_{p^q}`.
pub(crate) fn lift_poly(k: &Gf, f: &[u64]) -> Vec<GfElem> {
    f.iter().map(|&c| k.from_fp(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Monic irreducibles of degree n over F_p, by necklace counting.
    fn irreducible_count(p: u64, n: u32) -> u64 {
        fn mobius(n: u32) -> i64 {
            let ds = prime_divisors(n);
            if ds.iter().any(|d| n % (d * d) == 0) {
                0
            } else if ds.len() % 2 == 0 {
                1
            } else {
                -1
            }
        }
        let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(n / d) * (p as i64).pow(d)).sum();
        (s / n as i64) as u64
    }

    #[test]
    fn rabin_counts() {
        for (p, n) in [(2u64, 1u32), (2, 2), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (5, 2)] {
            let total = (p as u128).pow(n);
            let count = (0..total)
                .filter(|&c| {
                    let mut f: Vec<u64> = (0..n).map(|i| ((c / (p as u128).pow(i)) % p as u128) as u64).collect();
                    f.push(1);
                    is_irreducible(&f, p)
                })
                .count() as u64;
            assert_eq!(count, irreducible_count(p, n), "p={p} n={n}");
        }
    }

    #[test]
    fn field_inverse() {
        let k = Gf::new(3, 4);
        let a = vec![1, 2, 0, 1];
        assert_eq!(k.mul(&a, &k.inv(&a)), k.from_fp(1));
    }

    #[test]
    fn ddf_counts() {
        for (p, q, r) in [(2u64, 2u32, 2u32), (2, 3, 2), (2, 4, 6), (3, 2, 4), (5, 3, 3)] {
            let k = Gf::new(p, q);
            let f = lift_poly(&k, &first_irreducible(p, r));
            let g = num_integer::gcd(q, r) as usize;
            assert_eq!(distinct_degree_counts(&k, &f), vec![(r as usize / g, g)], "{p} {q} {r}");
        }
    }

    #[test]
    fn powmod_matches_repeated_product() {
        let f = first_irreducible(3, 3);
        let mut acc = vec![1];
        for _ in 0..7 {
            acc = fp_rem(&fp_mul(&acc, &[1, 1], 3), &f, 3);
        }
        assert_eq!(fp_powmod(&[1, 1], 7, &f, 3), acc);
        assert_eq!(super::super::field::powmod(2, 10, 1_000_003), 1024);
    }
}
