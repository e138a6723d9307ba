//! The Omega functional
//!
//! ```text
//! Omega^a_{mu,nu}(f) = (L^{a+1} f / z^p)^mu (z^p / L^a f)^nu
//! ```
//!
//! its two-function ratio form, and the Theorem 1/2 expressions built from it
//! (`Phi`, `Psi` and the matching `chi` dominants). Powers are principal:
//! each factor has constant term 1, so `u^t` is the formal `exp(t log u)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::MultiplierOperator;
use crate::regions::DominantRegion;
use crate::series::TruncatedSeries;
use crate::tolerance;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Exponents `(mu, nu)` of the Omega functional. The operator index `a` lives
/// on the [`MultiplierOperator`] itself.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawExponents")]
pub struct OmegaParams {
    pub mu: f64,
    pub nu: f64,
}

#[derive(Deserialize)]
struct RawExponents {
    mu: f64,
    nu: f64,
}

impl TryFrom<RawExponents> for OmegaParams {
    type Error = Error;

    fn try_from(raw: RawExponents) -> Result<Self> {
        OmegaParams::new(raw.mu, raw.nu)
    }
}

impl OmegaParams {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !mu.is_finite() || !nu.is_finite() {
            return Err(Error::InvalidParameter(format!("exponents must be finite: mu = {mu}, nu = {nu}")));
        }
        if mu == 0.0 && nu == 0.0 {
            return Err(Error::InvalidParameter("mu and nu cannot both be zero".into()));
        }
        Ok(Self { mu, nu })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DominantKind {
    /// `(1 + A z) / (1 + B z)`.
    Janowski { a: f64, b: f64 },
    /// `((1 + z) / (1 - z))^eta`.
    PowerSector { eta: f64 },
    /// `sqrt(1 + z)`.
    SqrtShift,
    /// `(1 + (1 - 2 alpha) z) / (1 - z)`, onto `Re w > alpha`.
    HalfPlaneMap { alpha: f64 },
}

/// A dominant `psi` with `psi(0) = 1`, known in closed form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DominantSpec {
    kind: DominantKind,
}

/// Coefficients of `(1 + s z)^t`.
fn binomial_series(s: f64, t: f64, order: usize) -> Vec<f64> {
    let mut c = vec![1.0; order + 1];
    for n in 1..=order {
        c[n] = c[n - 1] * (t - (n - 1) as f64) / n as f64 * s;
    }
    c
}

impl DominantSpec {
    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        if !(-1.0..1.0).contains(&b) || !(a > b && a <= 1.0) {
            return Err(Error::InvalidParameter(format!("Janowski needs -1 <= B < A <= 1, got A = {a}, B = {b}")));
        }
        Ok(Self { kind: DominantKind::Janowski { a, b } })
    }

    pub fn power_sector(eta: f64) -> Result<Self> {
        if !(eta > 0.0 && eta <= 1.0) {
            return Err(Error::InvalidParameter(format!("power sector needs 0 < eta <= 1, got {eta}")));
        }
        Ok(Self { kind: DominantKind::PowerSector { eta } })
    }

    pub fn sqrt_shift() -> Self {
        Self { kind: DominantKind::SqrtShift }
    }

    pub fn half_plane_map(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha >= 1.0 {
            return Err(Error::InvalidParameter(format!("half-plane map needs alpha < 1, got {alpha}")));
        }
        Ok(Self { kind: DominantKind::HalfPlaneMap { alpha } })
    }

    pub fn kind(&self) -> DominantKind {
        self.kind
    }

    /// The image `psi(U)`.
    pub fn region(&self) -> DominantRegion {
        let region = match self.kind {
            DominantKind::Janowski { a, b } => DominantRegion::janowski(a, b),
            DominantKind::PowerSector { eta } => DominantRegion::sector(eta),
            DominantKind::SqrtShift => DominantRegion::lemniscate(0.5),
            DominantKind::HalfPlaneMap { alpha } => DominantRegion::half_plane(alpha),
        };
        region.expect("dominant parameters were validated on construction")
    }

    /// Taylor expansion of `psi` to `order`.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let real = match self.kind {
            DominantKind::Janowski { a, b } => janowski_series(a, b, order),
            DominantKind::HalfPlaneMap { alpha } => janowski_series(1.0 - 2.0 * alpha, -1.0, order),
            DominantKind::SqrtShift => binomial_series(1.0, 0.5, order),
            DominantKind::PowerSector { eta } => {
                let up = binomial_series(1.0, eta, order);
                let down = binomial_series(-1.0, -eta, order);
                (0..=order).map(|n| (0..=n).map(|k| up[k] * down[n - k]).sum()).collect()
            }
        };
        TruncatedSeries::from_real(0, &real).expect("finite dominant coefficients")
    }

    /// `psi(z)` from the closed form.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self.kind {
            DominantKind::Janowski { a, b } => (1.0 + a * z) / (1.0 + b * z),
            DominantKind::HalfPlaneMap { alpha } => (1.0 + (1.0 - 2.0 * alpha) * z) / (1.0 - z),
            DominantKind::SqrtShift => (1.0 + z).sqrt(),
            DominantKind::PowerSector { eta } => ((1.0 + z) / (1.0 - z)).powf(eta),
        }
    }

    /// `z psi'(z)` from the closed form.
    pub fn z_derivative(&self, z: Complex64) -> Complex64 {
        match self.kind {
            DominantKind::Janowski { a, b } => (a - b) * z / (1.0 + b * z).powu(2),
            DominantKind::HalfPlaneMap { alpha } => 2.0 * (1.0 - alpha) * z / (1.0 - z).powu(2),
            DominantKind::SqrtShift => z / (2.0 * (1.0 + z).sqrt()),
            DominantKind::PowerSector { eta } => 2.0 * eta * z / (1.0 - z * z) * self.eval(z),
        }
    }

    /// `c psi(z) + z psi'(z)`: both chi functions are of this shape.
    pub fn chi_value(&self, c: Complex64, z: Complex64) -> Complex64 {
        c * self.eval(z) + self.z_derivative(z)
    }
}

fn janowski_series(a: f64, b: f64, order: usize) -> Vec<f64> {
    let mut c = vec![1.0; order + 1];
    let mut tail = a - b;
    for coeff in c.iter_mut().skip(1) {
        *coeff = tail;
        tail *= -b;
    }
    c
}

impl fmt::Display for DominantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DominantKind::Janowski { a, b } => write!(f, "janowski:{a},{b}"),
            DominantKind::PowerSector { eta } => write!(f, "power-sector:{eta}"),
            DominantKind::SqrtShift => f.write_str("sqrt-shift"),
            DominantKind::HalfPlaneMap { alpha } => write!(f, "half-plane-map:{alpha}"),
        }
    }
}

pub(crate) fn parse_numbers(args: &str, want: usize, what: &str) -> Result<Vec<f64>> {
    let values: std::result::Result<Vec<f64>, _> =
        args.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse::<f64>()).collect();
    match values {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(Error::InvalidParameter(format!("{what} expects {want} number(s), got {args:?}"))),
    }
}

impl FromStr for DominantSpec {
    type Err = Error;

    /// `janowski:A,B`, `power-sector:eta`, `sqrt-shift` or `half-plane-map:alpha`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        match name.trim() {
            "janowski" => {
                let v = parse_numbers(args, 2, name)?;
                Self::janowski(v[0], v[1])
            }
            "power-sector" => Self::power_sector(parse_numbers(args, 1, name)?[0]),
            "sqrt-shift" if args.trim().is_empty() => Ok(Self::sqrt_shift()),
            "half-plane-map" => Self::half_plane_map(parse_numbers(args, 1, name)?[0]),
            _ => Err(Error::UnsupportedDominant(s.to_string())),
        }
    }
}

impl Serialize for DominantSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DominantSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// --- Omega and friends ----------------------------------------------------

fn check_constant(s: TruncatedSeries, expected: Complex64) -> Result<TruncatedSeries> {
    let got = s.coeff(0);
    if (got - expected).norm() > tolerance::CONSTANT_TERM * expected.norm().max(1.0) {
        return Err(Error::ConstantTerm { expected: expected.to_string(), got: got.to_string() });
    }
    Ok(s)
}

/// `(upper / z^p)^mu (z^p / lower)^nu` for two series with base power `p`.
fn omega_of(upper: &TruncatedSeries, lower: &TruncatedSeries, p: usize, params: &OmegaParams) -> Result<TruncatedSeries> {
    let log_u = upper.shift_down(p)?.log_unit()?;
    let log_v = lower.shift_down(p)?.log_unit()?;
    let exponent = log_u.scale(Complex64::new(params.mu, 0.0)).sub(&log_v.scale(Complex64::new(params.nu, 0.0)));
    Ok(exponent.exp_unit())
}

/// `alpha_{a+1}`: the recurrence coefficient one index up.
pub fn alpha_next(op: &MultiplierOperator) -> Result<Complex64> {
    Ok(op.shift_index(1)?.alpha())
}

/// `Omega^a_{mu,nu}(f)`.
pub fn omega(op: &MultiplierOperator, params: &OmegaParams, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let lower = op.apply(f)?;
    let upper = op.shift_index(1)?.apply(f)?;
    check_constant(omega_of(&upper, &lower, op.p(), params)?, ONE)
}

/// `Omega^a_{mu,nu}(f, F) = Omega(f) / Omega(F)`.
pub fn omega_ratio(
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
    big_f: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    let ratio = omega(op, params, f)?.divide(&omega(op, params, big_f)?)?;
    check_constant(ratio, ONE)
}

/// Theorem 1 functional
/// `Phi = Omega^a_{mu,nu}(f) [mu Omega^{a+1}_{1,1}(f) - (alpha_a nu / alpha_{a+1}) Omega^a_{1,1}(f)]`.
pub fn phi_theorem1(op: &MultiplierOperator, params: &OmegaParams, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let alpha = op.alpha();
    let up = op.shift_index(1)?;
    let alpha1 = up.alpha();
    if alpha1.norm() == 0.0 {
        return Err(Error::ZeroAlpha);
    }
    let one_one = OmegaParams { mu: 1.0, nu: 1.0 };
    let q = omega(op, params, f)?;
    let upper = omega(&up, &one_one, f)?;
    let lower = omega(op, &one_one, f)?;
    let bracket = upper.scale(Complex64::new(params.mu, 0.0)).sub(&lower.scale(alpha * params.nu / alpha1));
    let expected = params.mu - alpha * params.nu / alpha1;
    check_constant(q.cauchy_mul(&bracket), expected)
}

/// Theorem 2 functional
/// `Psi = Omega^a_{mu,nu}(F) [mu alpha_{a+1} Omega^a_{1,0}(f,F) - nu alpha_a Omega^a_{0,-1}(f,F)]`.
pub fn psi_theorem2(
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
    big_f: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    let alpha = op.alpha();
    let alpha1 = alpha_next(op)?;
    let q = omega(op, params, big_f)?;
    let upper = omega_ratio(op, &OmegaParams { mu: 1.0, nu: 0.0 }, f, big_f)?;
    let lower = omega_ratio(op, &OmegaParams { mu: 0.0, nu: -1.0 }, f, big_f)?;
    let bracket = upper.scale(params.mu * alpha1).sub(&lower.scale(params.nu * alpha));
    let expected = params.mu * alpha1 - params.nu * alpha;
    check_constant(q.cauchy_mul(&bracket), expected)
}

/// `c q + z q'`, the right-hand side both Theorem 1 and 2 reduce to.
pub fn first_order_form(q: &TruncatedSeries, c: Complex64) -> TruncatedSeries {
    q.scale(c).add(&q.z_derivative())
}

/// Theorem 1 dominant `chi = [(alpha_{a+1} mu - alpha_a nu) psi + z psi'] / alpha_{a+1}`.
pub fn chi_theorem1(
    dominant: &DominantSpec,
    alpha_a: Complex64,
    alpha_a1: Complex64,
    params: &OmegaParams,
    order: usize,
) -> Result<TruncatedSeries> {
    if alpha_a1.norm() == 0.0 {
        return Err(Error::ZeroAlpha);
    }
    Ok(chi_theorem2(dominant, alpha_a, alpha_a1, params, order).scale(1.0 / alpha_a1))
}

/// Theorem 2 dominant `chi = (mu alpha_{a+1} - nu alpha_a) psi + z psi'`.
pub fn chi_theorem2(
    dominant: &DominantSpec,
    alpha_a: Complex64,
    alpha_a1: Complex64,
    params: &OmegaParams,
    order: usize,
) -> TruncatedSeries {
    let psi = dominant.series(order);
    first_order_form(&psi, params.mu * alpha_a1 - params.nu * alpha_a)
}

/// Both sides of
/// `z Omega'/Omega = mu z(L^{a+1}f)'/L^{a+1}f - nu z(L^a f)'/L^a f + p(nu - mu)`.
pub fn log_derivative_sides(
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let q = omega(op, params, f)?;
    let lhs = q.z_derivative().divide(&q)?;
    let lower = op.apply(f)?;
    let upper = op.shift_index(1)?.apply(f)?;
    let du = upper.z_derivative().divide(&upper)?;
    let dl = lower.z_derivative().divide(&lower)?;
    let shift = TruncatedSeries::constant(Complex64::new(op.p() as f64 * (params.nu - params.mu), 0.0), du.order());
    let rhs = du.scale(Complex64::new(params.mu, 0.0)).sub(&dl.scale(Complex64::new(params.nu, 0.0))).add(&shift);
    Ok((lhs, rhs))
}

/// `Phi` next to `[(alpha_{a+1} mu - alpha_a nu) q + z q'] / alpha_{a+1}`.
pub fn phi_identity_sides(
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let phi = phi_theorem1(op, params, f)?;
    let alpha1 = alpha_next(op)?;
    let q = omega(op, params, f)?;
    let rhs = first_order_form(&q, alpha1 * params.mu - op.alpha() * params.nu).scale(1.0 / alpha1);
    Ok((phi, rhs))
}

/// `Psi` next to `(mu alpha_{a+1} - nu alpha_a) q + z q'` with `q = Omega(F)`.
pub fn psi_identity_sides(
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
    big_f: &TruncatedSeries,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let psi = psi_theorem2(op, params, f, big_f)?;
    let q = omega(op, params, big_f)?;
    let rhs = first_order_form(&q, params.mu * alpha_next(op)? - params.nu * op.alpha());
    Ok((psi, rhs))
}
