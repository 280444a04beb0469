//! Exact classification tools for semisimple 2-categories over a field.
//!
//! Modules cover exact arithmetic ([`arith`]), field profiles and division algebras
//! ([`field_profile`]), Z+-rings and Z+-modules ([`based_ring`], [`zplus_module`]),
//! 2-category skeletons ([`skeleton`]), pointed categories ([`pointed`]),
//! Davydov-Yetter cohomology ([`dy`]) and fusion 2-category products ([`fusion2`]).

pub mod arith;
pub mod based_ring;
pub mod dy;
pub mod field_profile;
pub mod fusion2;
pub mod pointed;
pub mod skeleton;
pub mod zplus_module;

pub use arith::{
    split_commutative_algebra, AlgebraByStructureConstants, AlgebraError, ArithError, Block, ExactMatrix, FieldElem,
    FieldTag, Poly,
};
pub use based_ring::{BasedRingData, BasedRingError, ValidatedRing, WeakBasedCertificate};
pub use dy::{DYComplex, DyError, PointedFunctorData, SeparabilityDiagnostic};
pub use field_profile::{DivisionAlgebraClass, DivisionAlgebraLabel, FieldKind, FieldProfile, FieldProfileError};
pub use fusion2::{Fusion2Product, FusionError, GradedAlgebraObject, RealBlock};
pub use pointed::{BraidingParam, FiniteAbelianGroup, H2Group, ModuleClass, PointedError, Subgroup};
pub use skeleton::{CompactnessReport, SkeletonError, TwoCatSkeleton, ValidatedSkeleton};
pub use zplus_module::{
    EnumerationBounds, RingHom, SearchMode, ValidatedModule, ZModError, ZPlusModuleData,
};
