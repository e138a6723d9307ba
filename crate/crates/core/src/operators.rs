//! The five multiplier families and the index recurrence that unifies them.
//!
//! Every operator acts diagonally on coefficients:
//! `L f = z^p + sum m(n) a_n z^n` with `m(p) = 1`. Each family has a raisable
//! index `a` and a coefficient `alpha_a` such that
//!
//! ```text
//! z (L^a f)' = alpha_a L^{a+1} f - (alpha_a - p) L^a f.
//! ```
//!
//! Three families (J, T, Q) are naturally written with a lowering index; they
//! are stored here in raising orientation, so `shift_index(+1)` always moves to
//! the operator that appears on the right of the recurrence.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{ReportKind, VerificationReport, Violation};
use crate::series::{rel_error, TruncatedSeries};
use crate::tolerance;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    H,
    I,
    J,
    T,
    Q,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [FamilyTag::H, FamilyTag::I, FamilyTag::J, FamilyTag::T, FamilyTag::Q];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::H => "H",
            FamilyTag::I => "I",
            FamilyTag::J => "J",
            FamilyTag::T => "T",
            FamilyTag::Q => "Q",
        }
    }
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which coefficient formula the Q family uses.
///
/// `Printed` shifts both Gamma arguments by `p`; it does not satisfy the index
/// recurrence for any `p >= 1` and is kept only so that can be shown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QVariant {
    #[default]
    IdentityConsistent,
    Printed,
}

/// Numerator and denominator parameters of `lFm`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricParams {
    alphas: Vec<Complex64>,
    betas: Vec<Complex64>,
}

fn near_nonpositive_integer(z: Complex64) -> bool {
    let tol = tolerance::EXCLUDED_POINT;
    z.im.abs() <= tol && z.re <= tol && (z.re - z.re.round()).abs() <= tol
}

impl HypergeometricParams {
    pub fn new(alphas: Vec<Complex64>, betas: Vec<Complex64>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidParameter("at least one numerator parameter is required".into()));
        }
        if alphas.len() > betas.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "l = {} exceeds m + 1 = {}",
                alphas.len(),
                betas.len() + 1
            )));
        }
        for (index, b) in betas.iter().enumerate() {
            if near_nonpositive_integer(*b) {
                return Err(Error::InvalidBeta { index: index + 1, value: b.to_string() });
            }
        }
        Ok(Self { alphas, betas })
    }

    /// `l = m + 1` with `alpha_{i+1} = beta_i`: every multiplier reduces to
    /// `(alpha_1)_k / k!`.
    pub fn chain(alpha1: Complex64, betas: Vec<Complex64>) -> Result<Self> {
        let mut alphas = vec![alpha1];
        alphas.extend(betas.iter().copied());
        Self::new(alphas, betas)
    }

    pub fn alphas(&self) -> &[Complex64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Complex64] {
        &self.betas
    }

    fn with_alpha1(&self, alpha1: Complex64) -> Result<Self> {
        let mut alphas = self.alphas.clone();
        alphas[0] = alpha1;
        Self::new(alphas, self.betas.clone())
    }

    /// `prod_i (alpha_i + j) / (prod_j (beta_j + j) * (j + 1))`: the step
    /// ratio between consecutive Dziok-Srivastava multipliers.
    fn step(&self, j: usize) -> Complex64 {
        let j = j as f64;
        let num: Complex64 = self.alphas.iter().map(|a| a + j).product();
        let den: Complex64 = self.betas.iter().map(|b| b + j).product();
        num / (den * (j + 1.0))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Dziok-Srivastava operator; index `alpha_1`.
    H(HypergeometricParams),
    /// Multiplier transform `((n+lambda)/(p+lambda))^r`; index `r`.
    I { r: i32, lambda: Complex64 },
    /// Inverse of H against `z^p / (1-z)^(kappa+p-1)`; index lowers `alpha_1`.
    J { params: HypergeometricParams, kappa: f64 },
    /// Inverse of I against the same binomial kernel; index lowers `r`.
    T { r: i32, lambda: Complex64, kappa: f64 },
    /// Gamma-ratio integral operator; index lowers `alpha`.
    Q { alpha: f64, beta: f64, variant: QVariant },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierOperator {
    p: usize,
    family: Family,
}

fn check_valence(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::InvalidParameter("valence p must be at least 1".into()));
    }
    Ok(())
}

fn check_lambda(lambda: Complex64, p: usize) -> Result<()> {
    if near_nonpositive_integer(lambda) && lambda.re < -0.5 || (lambda + p as f64).norm() <= tolerance::EXCLUDED_POINT {
        return Err(Error::InvalidLambda(lambda.to_string()));
    }
    Ok(())
}

fn check_kappa(kappa: f64) -> Result<()> {
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(Error::InvalidParameter(format!("kappa = {kappa} must be positive")));
    }
    Ok(())
}

/// `(kappa + p - 1)_k / k!`, the coefficient of `z^{p+k}` in `z^p/(1-z)^(kappa+p-1)`.
fn binomial_step(kappa: f64, p: usize, j: usize) -> f64 {
    (kappa + p as f64 - 1.0 + j as f64) / (j as f64 + 1.0)
}

impl MultiplierOperator {
    pub fn dziok_srivastava(params: HypergeometricParams, p: usize) -> Result<Self> {
        check_valence(p)?;
        Ok(Self { p, family: Family::H(params) })
    }

    pub fn multiplier_transform(r: i32, lambda: Complex64, p: usize) -> Result<Self> {
        check_valence(p)?;
        check_lambda(lambda, p)?;
        Ok(Self { p, family: Family::I { r, lambda } })
    }

    pub fn j_kappa(params: HypergeometricParams, kappa: f64, p: usize) -> Result<Self> {
        check_valence(p)?;
        check_kappa(kappa)?;
        // The multipliers divide by (alpha_i)_k; any non-positive integer
        // alpha_i zeroes it once k is large enough.
        for (index, a) in params.alphas.iter().enumerate() {
            if near_nonpositive_integer(*a) {
                return Err(Error::ZeroAlphaPochhammer { index: index + 1, value: a.to_string() });
            }
        }
        Ok(Self { p, family: Family::J { params, kappa } })
    }

    pub fn t_kappa(r: i32, lambda: Complex64, kappa: f64, p: usize) -> Result<Self> {
        check_valence(p)?;
        check_lambda(lambda, p)?;
        check_kappa(kappa)?;
        Ok(Self { p, family: Family::T { r, lambda, kappa } })
    }

    pub fn q_liu(alpha: f64, beta: f64, p: usize, variant: QVariant) -> Result<Self> {
        check_valence(p)?;
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha = {alpha} must be non-negative")));
        }
        if !(beta > -1.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!("beta = {beta} must exceed -1")));
        }
        Ok(Self { p, family: Family::Q { alpha, beta, variant } })
    }

    /// The operator that leaves every coefficient unchanged (`I_p(0, 0)`).
    pub fn identity(p: usize) -> Result<Self> {
        Self::multiplier_transform(0, Complex64::new(0.0, 0.0), p)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn tag(&self) -> FamilyTag {
        match self.family {
            Family::H(_) => FamilyTag::H,
            Family::I { .. } => FamilyTag::I,
            Family::J { .. } => FamilyTag::J,
            Family::T { .. } => FamilyTag::T,
            Family::Q { .. } => FamilyTag::Q,
        }
    }

    /// Current value of the family's own parameter (`alpha_1`, `r` or `alpha`).
    pub fn index(&self) -> Complex64 {
        match &self.family {
            Family::H(h) | Family::J { params: h, .. } => h.alphas[0],
            Family::I { r, .. } | Family::T { r, .. } => Complex64::new(*r as f64, 0.0),
            Family::Q { alpha, .. } => Complex64::new(*alpha, 0.0),
        }
    }

    /// The recurrence coefficient `alpha_a`.
    pub fn alpha(&self) -> Complex64 {
        let p = self.p as f64;
        match &self.family {
            Family::H(h) => h.alphas[0],
            Family::J { params, .. } => params.alphas[0] - 1.0,
            Family::I { lambda, .. } | Family::T { lambda, .. } => lambda + p,
            Family::Q { alpha, beta, .. } => Complex64::new(alpha + beta + p - 1.0, 0.0),
        }
    }

    /// True when `alpha_{a+1} = alpha_a` for every index (I and T).
    pub fn alpha_independent_of_index(&self) -> bool {
        matches!(self.family, Family::I { .. } | Family::T { .. })
    }

    /// Multiplier `m(n)` for `n >= p`.
    pub fn multiplier(&self, n: usize) -> Complex64 {
        assert!(n >= self.p, "multiplier requested below the valence");
        if n == self.p {
            return ONE;
        }
        let p = self.p;
        let k = n - p;
        match &self.family {
            Family::H(h) => (0..k).map(|j| h.step(j)).product(),
            Family::I { r, lambda } => ((lambda + n as f64) / (lambda + p as f64)).powi(*r),
            Family::J { params, kappa } => (0..k)
                .map(|j| Complex64::new(binomial_step(*kappa, p, j), 0.0) / params.step(j))
                .product(),
            Family::T { r, lambda, kappa } => {
                let binom: f64 = (0..k).map(|j| binomial_step(*kappa, p, j)).product();
                ((lambda + p as f64) / (lambda + n as f64)).powi(*r) * binom
            }
            Family::Q { alpha, beta, variant } => {
                let len = match variant {
                    QVariant::IdentityConsistent => k,
                    QVariant::Printed => n,
                };
                let b = beta + p as f64;
                let ratio: f64 = (0..len).map(|j| (b + j as f64) / (alpha + b + j as f64)).product();
                Complex64::new(ratio, 0.0)
            }
        }
    }

    /// Multipliers for `n = p ..= order`.
    pub fn multipliers(&self, order: usize) -> Vec<Complex64> {
        (self.p..=order).map(|n| self.multiplier(n)).collect()
    }

    /// The kernel series `z^p + sum m(n) z^n` whose Hadamard product with `f`
    /// is `L f`.
    pub fn kernel(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(self.p, order, |n| self.multiplier(n))
    }

    pub fn apply(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        if f.base_power() != self.p {
            return Err(Error::BasePowerMismatch(self.p, f.base_power()));
        }
        let m = self.multipliers(f.order());
        let out = f.map(|n, c| c * m[n - self.p]);
        TruncatedSeries::new(out.base_power(), out.coeffs().to_vec())
    }

    /// The operator with its index moved `delta` steps in the raising
    /// direction of the recurrence.
    pub fn shift_index(&self, delta: i32) -> Result<Self> {
        let d = delta as f64;
        let p = self.p;
        match &self.family {
            Family::H(h) => Self::dziok_srivastava(h.with_alpha1(h.alphas[0] + d)?, p),
            Family::I { r, lambda } => Self::multiplier_transform(r + delta, *lambda, p),
            Family::J { params, kappa } => Self::j_kappa(params.with_alpha1(params.alphas[0] - d)?, *kappa, p),
            Family::T { r, lambda, kappa } => Self::t_kappa(r - delta, *lambda, *kappa, p),
            Family::Q { alpha, beta, variant } => Self::q_liu(alpha - d, *beta, p, *variant),
        }
    }

    /// Both sides of the index recurrence on `f`, compared coefficient-wise.
    pub fn recurrence_check(&self, f: &TruncatedSeries) -> VerificationReport {
        let mut report = VerificationReport::new(format!("recurrence:{}", self.tag()), ReportKind::Identity);
        report.config_echo = serde_json::to_value(self).unwrap_or_default();
        let alpha = self.alpha();
        if alpha.norm() == 0.0 {
            report.fail(Violation::note("alpha_a vanishes"));
            return report;
        }
        let sides = (|| -> Result<(TruncatedSeries, TruncatedSeries)> {
            let la = self.apply(f)?;
            let la1 = self.shift_index(1)?.apply(f)?;
            let lhs = la.z_derivative();
            let rhs = la1.scale(alpha).sub(&la.scale(alpha - self.p as f64));
            Ok((lhs, rhs))
        })();
        match sides {
            Ok((lhs, rhs)) => {
                for n in lhs.base_power()..=lhs.order().min(rhs.order()) {
                    let err = rel_error(lhs.coeff(n), rhs.coeff(n));
                    report.record_error(err, tolerance::COEFF_REL, || Violation::coefficient(n, err));
                }
            }
            Err(e) => report.fail(Violation::note(e.to_string())),
        }
        report
    }
}

// --- JSON descriptor -------------------------------------------------------

/// A complex number on the wire: either a bare real or `[re, im]`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum WireComplex {
    Real(f64),
    Pair([f64; 2]),
}

impl From<WireComplex> for Complex64 {
    fn from(w: WireComplex) -> Self {
        match w {
            WireComplex::Real(re) => Complex64::new(re, 0.0),
            WireComplex::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

impl From<Complex64> for WireComplex {
    fn from(c: Complex64) -> Self {
        WireComplex::Pair([c.re, c.im])
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergeometricWire {
    alphas: Vec<WireComplex>,
    #[serde(default)]
    betas: Vec<WireComplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiplierWire {
    r: i32,
    #[serde(default = "zero_lambda")]
    lambda: WireComplex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
}

fn zero_lambda() -> WireComplex {
    WireComplex::Real(0.0)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GammaRatioWire {
    alpha: f64,
    beta: f64,
}

/// `{"family": "H|I|J|T|Q", "p": int, "params": {...}, "variant": "..."}`.
#[derive(Serialize, Deserialize)]
struct Descriptor {
    family: FamilyTag,
    p: usize,
    params: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variant: Option<QVariant>,
}

fn wire_params<T: serde::de::DeserializeOwned>(value: serde_json::Value, family: FamilyTag) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::InvalidParameter(format!("{family} params: {e}")))
}

fn need_kappa(kappa: Option<f64>, family: FamilyTag) -> Result<f64> {
    kappa.ok_or_else(|| Error::InvalidParameter(format!("{family} params need kappa")))
}

impl TryFrom<Descriptor> for MultiplierOperator {
    type Error = Error;

    fn try_from(d: Descriptor) -> Result<Self> {
        let tag = d.family;
        let hyp = |w: HypergeometricWire| {
            HypergeometricParams::new(
                w.alphas.into_iter().map(Into::into).collect(),
                w.betas.into_iter().map(Into::into).collect(),
            )
        };
        match tag {
            FamilyTag::H => {
                let w: HypergeometricWire = wire_params(d.params, tag)?;
                Self::dziok_srivastava(hyp(w)?, d.p)
            }
            FamilyTag::J => {
                let w: HypergeometricWire = wire_params(d.params, tag)?;
                let kappa = need_kappa(w.kappa, tag)?;
                Self::j_kappa(hyp(w)?, kappa, d.p)
            }
            FamilyTag::I => {
                let w: MultiplierWire = wire_params(d.params, tag)?;
                Self::multiplier_transform(w.r, w.lambda.into(), d.p)
            }
            FamilyTag::T => {
                let w: MultiplierWire = wire_params(d.params, tag)?;
                Self::t_kappa(w.r, w.lambda.into(), need_kappa(w.kappa, tag)?, d.p)
            }
            FamilyTag::Q => {
                let w: GammaRatioWire = wire_params(d.params, tag)?;
                Self::q_liu(w.alpha, w.beta, d.p, d.variant.unwrap_or_default())
            }
        }
    }
}

impl From<&MultiplierOperator> for Descriptor {
    fn from(op: &MultiplierOperator) -> Self {
        let hyp = |h: &HypergeometricParams, kappa: Option<f64>| HypergeometricWire {
            alphas: h.alphas.iter().map(|&c| c.into()).collect(),
            betas: h.betas.iter().map(|&c| c.into()).collect(),
            kappa,
        };
        let (params, variant) = match &op.family {
            Family::H(h) => (serde_json::to_value(hyp(h, None)), None),
            Family::J { params, kappa } => (serde_json::to_value(hyp(params, Some(*kappa))), None),
            Family::I { r, lambda } => (
                serde_json::to_value(MultiplierWire { r: *r, lambda: (*lambda).into(), kappa: None }),
                None,
            ),
            Family::T { r, lambda, kappa } => (
                serde_json::to_value(MultiplierWire { r: *r, lambda: (*lambda).into(), kappa: Some(*kappa) }),
                None,
            ),
            Family::Q { alpha, beta, variant } => {
                (serde_json::to_value(GammaRatioWire { alpha: *alpha, beta: *beta }), Some(*variant))
            }
        };
        Descriptor { family: op.tag(), p: op.p, params: params.unwrap_or_default(), variant }
    }
}

impl Serialize for MultiplierOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Descriptor::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiplierOperator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = Descriptor::deserialize(d)?;
        MultiplierOperator::try_from(desc).map_err(serde::de::Error::custom)
    }
}
