//! Finite skeletons of semisimple 2-categories: simple objects with Hom-nonvanishing
//! data, connected components, and truncations of infinite families.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::is_prime;
use crate::based_ring::BasedRingData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeletonError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("identity 1-morphism of simple {0} is zero")]
    ZeroIdentity(usize),
    #[error("Hom({0},{1}) and Hom({1},{0}) disagree on vanishing")]
    AsymmetricHom(usize, usize),
    #[error("Hom({0},{1}) and Hom({1},{2}) are nonzero but Hom({0},{2}) is zero")]
    SchurViolation(usize, usize, usize),
    #[error("hom_dims[{0}][{1}] disagrees with hom_nonzero")]
    HomDimsMismatch(usize, usize),
    #[error("simple index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("multiplicity of simple {0} must be positive")]
    ZeroMultiplicity(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("truncation depth must be positive")]
    ZeroDepth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCatSkeleton {
    pub simples: Vec<String>,
    pub hom_nonzero: Vec<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom_dims: Option<Vec<Vec<u64>>>,
    /// Dimension of the endomorphism algebra of each simple, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_end_dim: Option<Vec<u64>>,
    /// Grothendieck ring of each simple's endomorphism category, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_ring: Option<Vec<Option<BasedRingData>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidatedSkeleton {
    #[serde(flatten)]
    skeleton: TwoCatSkeleton,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation_depth: Option<u32>,
}

pub fn validate_skeleton(s: TwoCatSkeleton) -> Result<ValidatedSkeleton, SkeletonError> {
    let n = s.simples.len();
    if s.hom_nonzero.len() != n || s.hom_nonzero.iter().any(|r| r.len() != n) {
        return Err(SkeletonError::Shape(format!("hom_nonzero must be {n}x{n}")));
    }
    let h = &s.hom_nonzero;
    if let Some(i) = (0..n).find(|&i| !h[i][i]) {
        return Err(SkeletonError::ZeroIdentity(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if h[i][j] != h[j][i] {
                return Err(SkeletonError::AsymmetricHom(i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !h[i][j] {
                continue;
            }
            for k in 0..n {
                if h[j][k] && !h[i][k] {
                    return Err(SkeletonError::SchurViolation(i, j, k));
                }
            }
        }
    }
    if let Some(d) = &s.hom_dims {
        if d.len() != n || d.iter().any(|r| r.len() != n) {
            return Err(SkeletonError::Shape(format!("hom_dims must be {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..n {
                if (d[i][j] > 0) != h[i][j] || d[i][j] != d[j][i] {
                    return Err(SkeletonError::HomDimsMismatch(i, j));
                }
            }
        }
    }
    if s.max_end_dim.as_ref().is_some_and(|v| v.len() != n) {
        return Err(SkeletonError::Shape(format!("max_end_dim must have length {n}")));
    }
    if s.end_ring.as_ref().is_some_and(|v| v.len() != n) {
        return Err(SkeletonError::Shape(format!("end_ring must have length {n}")));
    }
    Ok(ValidatedSkeleton { skeleton: s, truncation_depth: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompactnessReport {
    pub num_components: usize,
    pub num_simples: usize,
    pub is_connected: bool,
    /// Set when the skeleton truncates an infinite family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation_depth: Option<u32>,
}

impl ValidatedSkeleton {
    pub fn skeleton(&self) -> &TwoCatSkeleton {
        &self.skeleton
    }

    pub fn num_simples(&self) -> usize {
        self.skeleton.simples.len()
    }

    pub fn truncation_depth(&self) -> Option<u32> {
        self.truncation_depth
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn pi0(&self) -> Vec<Vec<usize>> {
        let n = self.num_simples();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while p[root] != root {
                root = p[root];
            }
            let mut y = x;
            while p[y] != root {
                let next = p[y];
                p[y] = root;
                y = next;
            }
            root
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.skeleton.hom_nonzero[i][j] {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let root = find(&mut parent, i);
            if slot[root] == usize::MAX {
                slot[root] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[root]].push(i);
        }
        comps
    }

    pub fn compactness_report(&self) -> CompactnessReport {
        let num_components = self.pi0().len();
        CompactnessReport {
            num_components,
            num_simples: self.num_simples(),
            is_connected: num_components == 1,
            truncation_depth: self.truncation_depth,
        }
    }

    /// Sort by simple index and merge repeated entries.
    pub fn decompose_object(&self, expr: &[(usize, u64)]) -> Result<Vec<(usize, u64)>, SkeletonError> {
        let n = self.num_simples();
        let mut out: Vec<(usize, u64)> = Vec::with_capacity(expr.len());
        for &(i, m) in expr {
            if i >= n {
                return Err(SkeletonError::IndexOutOfRange(i));
            }
            if m == 0 {
                return Err(SkeletonError::ZeroMultiplicity(i));
            }
            out.push((i, m));
        }
        out.sort_unstable();
        let mut merged: Vec<(usize, u64)> = Vec::with_capacity(out.len());
        for (i, m) in out {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += m,
                _ => merged.push((i, m)),
            }
        }
        Ok(merged)
    }
}

/// Simples `Vect_{F_{p^q}}` for `q = 1..=depth`, all connected; `hom_dims(q, r) = gcd(q, r)`
/// and `max_end_dim(q) = q`.
pub fn truncated_family_2vect_fp(p: u64, depth: u32) -> Result<ValidatedSkeleton, SkeletonError> {
    if !is_prime(p) {
        return Err(SkeletonError::NotPrime(p));
    }
    if depth == 0 {
        return Err(SkeletonError::ZeroDepth);
    }
    let qs: Vec<u64> = (1..=u64::from(depth)).collect();
    let s = TwoCatSkeleton {
        simples: qs.iter().map(|q| format!("Vect_F{p}^{q}")).collect(),
        hom_nonzero: vec![vec![true; qs.len()]; qs.len()],
        hom_dims: Some(qs.iter().map(|&q| qs.iter().map(|&r| q.gcd(&r)).collect()).collect()),
        max_end_dim: Some(qs.clone()),
        end_ring: None,
    };
    let mut v = validate_skeleton(s)?;
    v.truncation_depth = Some(depth);
    Ok(v)
}

/// Module categories over real vector spaces: `Vect_R`, `Vect_C`, `Vect_H`.
pub fn mod_vect_real_skeleton() -> ValidatedSkeleton {
    validate_skeleton(TwoCatSkeleton {
        simples: vec!["Vect_R".into(), "Vect_C".into(), "Vect_H".into()],
        hom_nonzero: vec![vec![true; 3]; 3],
        hom_dims: Some(vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 1]]),
        max_end_dim: Some(vec![1, 2, 4]),
        end_ring: None,
    })
    .expect("fixed data")
}

/// Separable module categories over `Vect(Z/p)` for an algebraically closed field of
/// the given characteristic: `Vect(Z/p)` and `Vect`, or only `Vect(Z/p)` when the
/// characteristic is `p`.
pub fn mod_vect_zp_skeleton(p: u64, characteristic: u64) -> Result<ValidatedSkeleton, SkeletonError> {
    if !is_prime(p) {
        return Err(SkeletonError::NotPrime(p));
    }
    let s = if characteristic == p {
        TwoCatSkeleton {
            simples: vec![format!("Vect(Z/{p})")],
            hom_nonzero: vec![vec![true]],
            hom_dims: Some(vec![vec![p]]),
            max_end_dim: None,
            end_ring: None,
        }
    } else {
        TwoCatSkeleton {
            simples: vec![format!("Vect(Z/{p})"), "Vect".into()],
            hom_nonzero: vec![vec![true; 2]; 2],
            hom_dims: Some(vec![vec![p, 1], vec![1, p]]),
            max_end_dim: None,
            end_ring: None,
        }
    };
    validate_skeleton(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(h: Vec<Vec<bool>>) -> TwoCatSkeleton {
        TwoCatSkeleton {
            simples: (0..h.len()).map(|i| format!("X{i}")).collect(),
            hom_nonzero: h,
            hom_dims: None,
            max_end_dim: None,
            end_ring: None,
        }
    }

    #[test]
    fn validation_examples() {
        assert!(validate_skeleton(sk(vec![vec![true; 2]; 2])).is_ok());
        assert_eq!(
            validate_skeleton(sk(vec![vec![true, true], vec![false, true]])),
            Err(SkeletonError::AsymmetricHom(0, 1))
        );
        let path = vec![vec![true, true, false], vec![true, true, true], vec![false, true, true]];
        assert!(matches!(validate_skeleton(sk(path)), Err(SkeletonError::SchurViolation(..))));
        assert_eq!(validate_skeleton(sk(vec![vec![false]])), Err(SkeletonError::ZeroIdentity(0)));
    }

    #[test]
    fn components() {
        assert_eq!(mod_vect_zp_skeleton(3, 0).unwrap().pi0().len(), 1);
        let two = validate_skeleton(sk(vec![vec![true, false], vec![false, true]])).unwrap();
        assert_eq!(two.pi0(), vec![vec![0], vec![1]]);
        assert_eq!(mod_vect_real_skeleton().pi0(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn reports() {
        let r = mod_vect_real_skeleton().compactness_report();
        assert_eq!((r.num_components, r.num_simples, r.is_connected), (1, 3, true));
        let empty = validate_skeleton(sk(vec![])).unwrap().compactness_report();
        assert_eq!((empty.num_components, empty.num_simples, empty.is_connected), (0, 0, false));
        let fam = truncated_family_2vect_fp(2, 5).unwrap().compactness_report();
        assert_eq!((fam.num_components, fam.num_simples, fam.is_connected), (1, 5, true));
        assert_eq!(fam.truncation_depth, Some(5));
    }

    #[test]
    fn truncated_family() {
        let f = truncated_family_2vect_fp(2, 4).unwrap();
        assert_eq!(f.skeleton().hom_dims.as_ref().unwrap()[1][3], 2);
        assert_eq!(f.skeleton().max_end_dim.as_ref().unwrap(), &vec![1, 2, 3, 4]);
        assert_eq!(truncated_family_2vect_fp(3, 1).unwrap().num_simples(), 1);
        assert!(truncated_family_2vect_fp(4, 1).is_err());
    }

    #[test]
    fn decomposition() {
        let s = truncated_family_2vect_fp(2, 3).unwrap();
        assert_eq!(s.decompose_object(&[(1, 2), (0, 1)]).unwrap(), vec![(0, 1), (1, 2)]);
        assert!(s.decompose_object(&[]).unwrap().is_empty());
        assert_eq!(s.decompose_object(&[(2, 1), (2, 1)]).unwrap(), vec![(2, 2)]);
        assert_eq!(s.decompose_object(&[(3, 1)]), Err(SkeletonError::IndexOutOfRange(3)));
    }
}
