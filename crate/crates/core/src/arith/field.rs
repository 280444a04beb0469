use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::cyclotomic;
use super::ArithError;

/// Which exact field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    Rational,
    Prime(u64),
    Cyclotomic(u32),
}

impl FieldTag {
    pub fn prime(p: u64) -> Result<Self, ArithError> {
        if is_prime(p) {
            Ok(FieldTag::Prime(p))
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    pub fn cyclotomic(n: u32) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::BadCyclotomicIndex(n));
        }
        Ok(FieldTag::Cyclotomic(n))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldTag::Prime(p) => p,
            _ => 0,
        }
    }

    /// Dimension over the prime field.
    pub fn degree(self) -> usize {
        match self {
            FieldTag::Cyclotomic(n) => cyclotomic::euler_phi(n),
            _ => 1,
        }
    }

    /// The prime subfield (`Q` or `F_p`).
    pub fn prime_field(self) -> FieldTag {
        match self {
            FieldTag::Cyclotomic(_) => FieldTag::Rational,
            t => t,
        }
    }

    pub fn zero(self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldElem {
        self.from_rational(&BigRational::from_integer(BigInt::from(v)))
            .expect("integers embed in every field")
    }

    pub fn from_bigint(self, v: &BigInt) -> FieldElem {
        self.from_rational(&BigRational::from_integer(v.clone()))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(self, v: &BigRational) -> Result<FieldElem, ArithError> {
        match self {
            FieldTag::Rational => Ok(FieldElem::Rational(v.clone())),
            FieldTag::Prime(p) => {
                let pb = BigInt::from(p);
                let num = v.numer().mod_floor(&pb).to_u64().unwrap();
                let den = v.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(ArithError::DenominatorVanishes(p));
                }
                Ok(FieldElem::Prime { p, r: mulmod(num, invmod(den, p), p) })
            }
            FieldTag::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); cyclotomic::euler_phi(n)];
                coeffs[0] = v.clone();
                Ok(FieldElem::Cyclotomic { n, coeffs })
            }
        }
    }

    /// `zeta_n^k` in `Q(zeta_n)`; `None` for other fields.
    pub fn zeta_power(self, k: i64) -> Option<FieldElem> {
        match self {
            FieldTag::Cyclotomic(n) => Some(FieldElem::Cyclotomic { n, coeffs: cyclotomic::zeta_power(n, k) }),
            _ => None,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "q"),
            FieldTag::Prime(p) => write!(f, "fp{p}"),
            FieldTag::Cyclotomic(n) => write!(f, "cyclo{n}"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = ArithError;

    /// Coefficient field codes: `q`, `fp<p>`, `cyclo<n>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::BadFieldCode(s.to_string());
        if s == "q" {
            Ok(FieldTag::Rational)
        } else if let Some(rest) = s.strip_prefix("fp") {
            FieldTag::prime(rest.parse().map_err(|_| bad())?)
        } else if let Some(rest) = s.strip_prefix("cyclo") {
            FieldTag::cyclotomic(rest.parse().map_err(|_| bad())?)
        } else {
            Err(bad())
        }
    }
}

/// An exact scalar in canonical form. Arithmetic between elements of different
/// fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    Rational(BigRational),
    /// Residue in `[0, p)`.
    Prime { p: u64, r: u64 },
    /// Coefficients on `1, zeta, ..., zeta^(phi(n)-1)`; always length `phi(n)`.
    Cyclotomic { n: u32, coeffs: Vec<BigRational> },
}

impl FieldElem {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldElem::Rational(_) => FieldTag::Rational,
            FieldElem::Prime { p, .. } => FieldTag::Prime(*p),
            FieldElem::Cyclotomic { n, .. } => FieldTag::Cyclotomic(*n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(v) => v.is_zero(),
            FieldElem::Prime { r, .. } => *r == 0,
            FieldElem::Cyclotomic { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.tag().one()
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElem::Rational(v) => FieldElem::Rational(v.recip()),
            FieldElem::Prime { p, r } => FieldElem::Prime { p: *p, r: invmod(*r, *p) },
            FieldElem::Cyclotomic { n, coeffs } => FieldElem::Cyclotomic { n: *n, coeffs: cyclotomic::inverse(*n, coeffs)? },
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.tag().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rational value when the element lies in the prime subfield of a char-0 field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElem::Rational(v) => Some(v.clone()),
            FieldElem::Cyclotomic { coeffs, .. } if coeffs.iter().skip(1).all(Zero::is_zero) => Some(coeffs[0].clone()),
            _ => None,
        }
    }

    /// Coordinates over the prime field: one entry for `Q`/`F_p`, `phi(n)` for `Q(zeta_n)`.
    pub fn prime_field_coords(&self) -> Vec<FieldElem> {
        match self {
            FieldElem::Cyclotomic { coeffs, .. } => coeffs.iter().cloned().map(FieldElem::Rational).collect(),
            other => vec![other.clone()],
        }
    }

    fn check_same(&self, other: &FieldElem) {
        assert_eq!(self.tag(), other.tag(), "field mismatch in exact arithmetic");
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(v) => write!(f, "{v}"),
            FieldElem::Prime { r, .. } => write!(f, "{r}"),
            FieldElem::Cyclotomic { coeffs, .. } => {
                let mut first = true;
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        f.write_str(if c.is_negative() { " - " } else { " + " })?;
                    } else if c.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                    let a = c.abs();
                    match k {
                        0 => write!(f, "{a}")?,
                        _ if a.is_one() => write!(f, "z^{k}")?,
                        _ => write!(f, "{a}*z^{k}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for FieldElem {
    /// Rationals as `"a/b"` strings, residues as integers, cyclotomic elements as
    /// coefficient vectors of rational strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FieldElem::Rational(v) => s.serialize_str(&v.to_string()),
            FieldElem::Prime { r, .. } => s.serialize_u64(*r),
            FieldElem::Cyclotomic { coeffs, .. } => {
                let strs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                strs.serialize(s)
            }
        }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Prime { p, r: a }, FieldElem::Prime { r: b, .. }) => FieldElem::Prime { p: *p, r: addmod(*a, *b, *p) },
            (FieldElem::Cyclotomic { n, coeffs: a }, FieldElem::Cyclotomic { coeffs: b, .. }) => FieldElem::Cyclotomic {
                n: *n,
                coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Prime { p, r: a }, FieldElem::Prime { r: b, .. }) => FieldElem::Prime { p: *p, r: mulmod(*a, *b, *p) },
            (FieldElem::Cyclotomic { n, coeffs: a }, FieldElem::Cyclotomic { coeffs: b, .. }) => {
                FieldElem::Cyclotomic { n: *n, coeffs: cyclotomic::mul(*n, a, b) }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Prime { p, r } => FieldElem::Prime { p: *p, r: if *r == 0 { 0 } else { p - r } },
            FieldElem::Cyclotomic { n, coeffs } => FieldElem::Cyclotomic { n: *n, coeffs: coeffs.iter().map(|c| -c).collect() },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
