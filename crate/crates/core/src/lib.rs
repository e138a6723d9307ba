//! Linear multiplier operators acting on p-valent analytic functions, the
//! Omega functional built from them, and numerical checks of the
//! differential-subordination machinery that goes with it.
//!
//! Functions are represented as [`TruncatedSeries`]: dense complex
//! coefficient vectors `c_p ..= c_N` indexed by absolute power. Everything
//! downstream (operators, Omega, the integral transform, the region tests and
//! the verification harness) is built from the exact-order arithmetic in
//! [`series`].

// Parameter checks are written `!(x > 0.0)` on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod minimize;
pub mod omega;
pub mod operators;
pub mod regions;
pub mod report;
pub mod series;
pub mod tolerance;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use omega::{DominantKind, DominantSpec, OmegaParams};
pub use operators::{Family, FamilyTag, HypergeometricParams, MultiplierOperator, QVariant};
pub use regions::{ClassId, DominantRegion, SamplingGrid, SubordinationVerdict};
pub use report::{ReportKind, VerificationReport};
pub use series::TruncatedSeries;
pub use transforms::BernardiParams;

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 64;
