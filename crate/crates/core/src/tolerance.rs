//! Tolerances shared by the comparisons in this crate.

/// Relative tolerance for coefficient-wise agreement of two series.
pub const COEFF_REL: f64 = 1e-10;

/// Magnitude below which coefficient errors are measured absolutely.
pub const COEFF_ABS_FLOOR: f64 = 1e-14;

/// Magnitude below which coefficient errors are measured absolutely, so that
/// `rel_error <= COEFF_REL` means `|a - b| <= max(COEFF_REL |a|, COEFF_ABS_FLOOR)`.
pub const COEFF_SCALE_FLOOR: f64 = COEFF_ABS_FLOOR / COEFF_REL;

/// Acceptance threshold for the identity suites.
pub const IDENTITY: f64 = 1e-9;

/// A sample is inside a region when its margin exceeds `-REGION`.
pub const REGION: f64 = 1e-9;

/// Hypotheses must hold with at least this margin before a conclusion is
/// checked.
pub const SAFETY_BAND: f64 = 1e-4;

/// Allowed drift of an Omega-type constant term from its analytic value.
pub const CONSTANT_TERM: f64 = 1e-10;

/// Parameters closer than this to an excluded non-positive integer are
/// rejected.
pub const EXCLUDED_POINT: f64 = 1e-12;

/// Smallest admissible modulus of `alpha + n - p` in the integral transform.
pub const TRANSFORM_DENOMINATOR: f64 = 1e-9;

/// A function value smaller than this on the grid counts as a zero.
pub const GRID_ZERO: f64 = 1e-12;
