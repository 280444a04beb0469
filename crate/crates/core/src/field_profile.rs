//! Descriptors of the base field and its finite-dimensional division algebras.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldProfileError {
    #[error("unrecognized field profile code {0:?} (expected ac0, ac<p>, rc, fp<p>, q or sep:F<p>...)")]
    BadCode(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation not supported for field profile {0}")]
    UnsupportedProfile(String),
    #[error("{0} is not a central division algebra over {1}")]
    NotInBrauerGroup(String, String),
    #[error("division algebra {0} does not exist over {1}")]
    InvalidClass(String, String),
    #[error("max_dim must be at least 1")]
    ZeroMaxDim,
    #[error("max_dim {0} exceeds the listing cap {1}")]
    MaxDimTooLarge(u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// Algebraically closed of the given characteristic (0 or a prime).
    AlgClosed(u64),
    RealClosed,
    Finite(u64),
    Rationals,
    /// Separably closed but not perfect; the tag names the field and starts with `F<p>`.
    SeparablyClosedNonperfect(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldProfile {
    kind: FieldKind,
    characteristic: u64,
}

impl FieldProfile {
    pub fn alg_closed(characteristic: u64) -> Result<Self, FieldProfileError> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(FieldProfileError::NotPrime(characteristic));
        }
        Ok(FieldProfile { kind: FieldKind::AlgClosed(characteristic), characteristic })
    }

    pub fn real_closed() -> Self {
        FieldProfile { kind: FieldKind::RealClosed, characteristic: 0 }
    }

    pub fn finite(p: u64) -> Result<Self, FieldProfileError> {
        if !is_prime(p) {
            return Err(FieldProfileError::NotPrime(p));
        }
        Ok(FieldProfile { kind: FieldKind::Finite(p), characteristic: p })
    }

    pub fn rationals() -> Self {
        FieldProfile { kind: FieldKind::Rationals, characteristic: 0 }
    }

    pub fn separably_closed_nonperfect(tag: &str) -> Result<Self, FieldProfileError> {
        let digits: String = tag.strip_prefix('F').unwrap_or("").chars().take_while(char::is_ascii_digit).collect();
        let p: u64 = digits.parse().map_err(|_| FieldProfileError::BadCode(format!("sep:{tag}")))?;
        if !is_prime(p) {
            return Err(FieldProfileError::NotPrime(p));
        }
        Ok(FieldProfile { kind: FieldKind::SeparablyClosedNonperfect(tag.to_string()), characteristic: p })
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_alg_closed(&self) -> bool {
        matches!(self.kind, FieldKind::AlgClosed(_))
    }
}

impl fmt::Display for FieldProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FieldKind::AlgClosed(c) => write!(f, "ac{c}"),
            FieldKind::RealClosed => write!(f, "rc"),
            FieldKind::Finite(p) => write!(f, "fp{p}"),
            FieldKind::Rationals => write!(f, "q"),
            FieldKind::SeparablyClosedNonperfect(t) => write!(f, "sep:{t}"),
        }
    }
}

impl FromStr for FieldProfile {
    type Err = FieldProfileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldProfileError::BadCode(s.to_string());
        let num = |rest: &str| rest.parse::<u64>().map_err(|_| bad());
        match s {
            "rc" => Ok(Self::real_closed()),
            "q" => Ok(Self::rationals()),
            _ if s.starts_with("sep:") => Self::separably_closed_nonperfect(&s[4..]),
            _ if s.starts_with("ac") => Self::alg_closed(num(&s[2..])?),
            _ if s.starts_with("fp") => Self::finite(num(&s[2..])?),
            _ => Err(bad()),
        }
    }
}

impl Serialize for FieldProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SeparableClosureClass {
    SeparablyClosed,
    RealClosed,
    InfiniteSeparableClosure,
}

pub fn classify_finite_separable_closure(profile: &FieldProfile) -> SeparableClosureClass {
    match profile.kind {
        FieldKind::AlgClosed(_) | FieldKind::SeparablyClosedNonperfect(_) => SeparableClosureClass::SeparablyClosed,
        FieldKind::RealClosed => SeparableClosureClass::RealClosed,
        FieldKind::Finite(_) | FieldKind::Rationals => SeparableClosureClass::InfiniteSeparableClosure,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DivisionAlgebraLabel {
    Base,
    Complexification,
    Quaternion,
    /// The degree-`q` extension of a finite field.
    FiniteExt(u32),
}

impl fmt::Display for DivisionAlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisionAlgebraLabel::Base => write!(f, "BASE"),
            DivisionAlgebraLabel::Complexification => write!(f, "COMPLEXIFICATION"),
            DivisionAlgebraLabel::Quaternion => write!(f, "QUATERNION"),
            DivisionAlgebraLabel::FiniteExt(q) => write!(f, "FINITE_EXT({q})"),
        }
    }
}

impl Serialize for DivisionAlgebraLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DivisionAlgebraClass {
    pub label: DivisionAlgebraLabel,
    /// Order in the Brauer group of the centre.
    pub brauer_order: u32,
    pub dim_over_base: u32,
}

impl DivisionAlgebraClass {
    pub fn of(label: DivisionAlgebraLabel) -> Self {
        let (brauer_order, dim_over_base) = match label {
            DivisionAlgebraLabel::Base => (1, 1),
            DivisionAlgebraLabel::Complexification => (1, 2),
            DivisionAlgebraLabel::Quaternion => (2, 4),
            DivisionAlgebraLabel::FiniteExt(q) => (1, q),
        };
        DivisionAlgebraClass { label, brauer_order, dim_over_base }
    }
}

/// Listing cap for the finite-field family, which is infinite.
pub const FINITE_LISTING_CAP: u32 = 1 << 16;

pub fn division_algebra_classes(
    profile: &FieldProfile,
    max_dim: u32,
) -> Result<Vec<DivisionAlgebraClass>, FieldProfileError> {
    use DivisionAlgebraLabel::*;
    if max_dim == 0 {
        return Err(FieldProfileError::ZeroMaxDim);
    }
    let labels = match profile.kind {
        FieldKind::AlgClosed(_) => vec![Base],
        FieldKind::RealClosed => [Base, Complexification, Quaternion]
            .into_iter()
            .filter(|l| DivisionAlgebraClass::of(*l).dim_over_base <= max_dim)
            .collect(),
        FieldKind::Finite(_) => {
            if max_dim > FINITE_LISTING_CAP {
                return Err(FieldProfileError::MaxDimTooLarge(max_dim, FINITE_LISTING_CAP));
            }
            (1..=max_dim).map(FiniteExt).collect()
        }
        FieldKind::Rationals | FieldKind::SeparablyClosedNonperfect(_) => {
            return Err(FieldProfileError::UnsupportedProfile(profile.to_string()))
        }
    };
    Ok(labels.into_iter().map(DivisionAlgebraClass::of).collect())
}

/// Group law of the Brauer group of the base field, on central division algebras.
pub fn brauer_add(
    profile: &FieldProfile,
    a: DivisionAlgebraLabel,
    b: DivisionAlgebraLabel,
) -> Result<DivisionAlgebraClass, FieldProfileError> {
    use DivisionAlgebraLabel::*;
    let check = |x: DivisionAlgebraLabel| -> Result<(), FieldProfileError> {
        let ok = match (&profile.kind, x) {
            (FieldKind::RealClosed, Base | Quaternion) => true,
            (FieldKind::RealClosed, FiniteExt(_)) => {
                return Err(FieldProfileError::InvalidClass(x.to_string(), profile.to_string()))
            }
            (FieldKind::AlgClosed(_), Base) => true,
            (FieldKind::AlgClosed(_), Quaternion | FiniteExt(_)) => {
                return Err(FieldProfileError::InvalidClass(x.to_string(), profile.to_string()))
            }
            (FieldKind::Finite(_), Base | FiniteExt(1)) => true,
            (FieldKind::Finite(_), Quaternion) => {
                return Err(FieldProfileError::InvalidClass(x.to_string(), profile.to_string()))
            }
            (FieldKind::Rationals | FieldKind::SeparablyClosedNonperfect(_), _) => {
                return Err(FieldProfileError::UnsupportedProfile(profile.to_string()))
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(FieldProfileError::NotInBrauerGroup(x.to_string(), profile.to_string()))
        }
    };
    check(a)?;
    check(b)?;
    let label = match profile.kind {
        FieldKind::RealClosed => {
            if (a == Quaternion) != (b == Quaternion) {
                Quaternion
            } else {
                Base
            }
        }
        FieldKind::Finite(_) => FiniteExt(1),
        _ => Base,
    };
    Ok(DivisionAlgebraClass::of(label))
}

#[cfg(test)]
mod tests {
    use super::DivisionAlgebraLabel::*;
    use super::*;

    #[test]
    fn codes_round_trip() {
        for code in ["ac0", "ac5", "rc", "fp7", "q", "sep:F3(t)^sep"] {
            let p: FieldProfile = code.parse().unwrap();
            assert_eq!(p.to_string(), code);
        }
        assert_eq!("sep:F3(t)^sep".parse::<FieldProfile>().unwrap().characteristic(), 3);
        assert!("ac4".parse::<FieldProfile>().is_err());
        assert!("fp".parse::<FieldProfile>().is_err());
        assert!("zz".parse::<FieldProfile>().is_err());
    }

    #[test]
    fn separable_closure_classes() {
        use SeparableClosureClass::*;
        assert_eq!(classify_finite_separable_closure(&FieldProfile::real_closed()), RealClosed);
        assert_eq!(classify_finite_separable_closure(&FieldProfile::finite(5).unwrap()), InfiniteSeparableClosure);
        assert_eq!(classify_finite_separable_closure(&FieldProfile::alg_closed(0).unwrap()), SeparablyClosed);
        assert_eq!(classify_finite_separable_closure(&FieldProfile::rationals()), InfiniteSeparableClosure);
    }

    #[test]
    fn division_algebra_listing() {
        let labels = |p: &FieldProfile, d| -> Vec<DivisionAlgebraLabel> {
            division_algebra_classes(p, d).unwrap().into_iter().map(|c| c.label).collect()
        };
        let rc = FieldProfile::real_closed();
        assert_eq!(labels(&rc, 4), vec![Base, Complexification, Quaternion]);
        assert_eq!(labels(&rc, 1).len(), 1);
        assert_eq!(labels(&rc, 3).len(), 2);
        assert_eq!(labels(&FieldProfile::alg_closed(0).unwrap(), 10), vec![Base]);
        assert_eq!(labels(&FieldProfile::finite(2).unwrap(), 3), vec![FiniteExt(1), FiniteExt(2), FiniteExt(3)]);
        assert!(matches!(
            division_algebra_classes(&FieldProfile::rationals(), 3),
            Err(FieldProfileError::UnsupportedProfile(_))
        ));
    }

    #[test]
    fn brauer_group_laws() {
        let rc = FieldProfile::real_closed();
        assert_eq!(brauer_add(&rc, Quaternion, Quaternion).unwrap().label, Base);
        assert_eq!(brauer_add(&rc, Base, Quaternion).unwrap().label, Quaternion);
        assert!(matches!(brauer_add(&rc, Complexification, Base), Err(FieldProfileError::NotInBrauerGroup(..))));
        let f3 = FieldProfile::finite(3).unwrap();
        assert_eq!(brauer_add(&f3, FiniteExt(1), FiniteExt(1)).unwrap().label, FiniteExt(1));
        assert!(brauer_add(&f3, FiniteExt(2), FiniteExt(1)).is_err());
        let ac = FieldProfile::alg_closed(2).unwrap();
        assert_eq!(brauer_add(&ac, Base, Base).unwrap().label, Base);
    }
}
