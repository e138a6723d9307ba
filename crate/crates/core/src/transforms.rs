//! The Bernardi-type integral transform
//!
//! ```text
//! F(z) = alpha / z^(alpha - p) * integral_0^z t^(alpha - p - 1) f(t) dt,
//! ```
//!
//! which acts on coefficients as `a_n -> alpha a_n / (alpha + n - p)`, and the
//! index shift it induces when `alpha` does not depend on the operator index.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::omega::{omega, OmegaParams};
use crate::operators::MultiplierOperator;
use crate::report::{ReportKind, VerificationReport, Violation};
use crate::series::{worst_coefficient, TruncatedSeries};
use crate::tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BernardiParams {
    pub alpha_a: Complex64,
    pub p: usize,
}

impl BernardiParams {
    pub fn new(alpha_a: Complex64, p: usize) -> Self {
        Self { alpha_a, p }
    }

    /// Rejects any `alpha + n - p` with modulus below the guard, `p < n <= order`.
    pub fn validate(&self, order: usize) -> Result<()> {
        if self.alpha_a.norm() < tolerance::TRANSFORM_DENOMINATOR {
            return Err(Error::ZeroAlpha);
        }
        for n in self.p + 1..=order {
            if (self.alpha_a + (n - self.p) as f64).norm() < tolerance::TRANSFORM_DENOMINATOR {
                return Err(Error::VanishingDenominator(n));
            }
        }
        Ok(())
    }
}

/// Termwise transform of `f`; the leading coefficient is kept as is.
pub fn bernardi(f: &TruncatedSeries, params: &BernardiParams) -> Result<TruncatedSeries> {
    if f.base_power() != params.p {
        return Err(Error::BasePowerMismatch(params.p, f.base_power()));
    }
    params.validate(f.order())?;
    let alpha = params.alpha_a;
    let p = params.p;
    Ok(f.map(|n, a| if n == p { a } else { alpha * a / (alpha + (n - p) as f64) }))
}

/// Both sides of `alpha f = (alpha - p) F + z F'`.
pub fn bernardi_differential_sides(
    f: &TruncatedSeries,
    params: &BernardiParams,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let big_f = bernardi(f, params)?;
    let lhs = f.scale(params.alpha_a);
    let rhs = big_f.scale(params.alpha_a - params.p as f64).add(&big_f.z_derivative());
    Ok((lhs, rhs))
}

/// Checks `L^a f = L^{a+1} F` and `Omega^a(f) = Omega^{a+1}(F)` with `F` the
/// transform at `alpha = alpha_a`. Only meaningful when `alpha_a` is the same
/// for every index.
pub fn theorem5_shift_check(
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
) -> Result<VerificationReport> {
    if !op.alpha_independent_of_index() {
        return Err(Error::AlphaNotConstant(op.tag().to_string()));
    }
    let big_f = bernardi(f, &BernardiParams::new(op.alpha(), op.p()))?;
    let up = op.shift_index(1)?;
    let mut report = VerificationReport::new(format!("theorem5-shift:{}", op.tag()), ReportKind::Identity);
    report.config_echo = serde_json::json!({ "operator": op, "omega": params });

    let (power, err) = worst_coefficient(&op.apply(f)?, &up.apply(&big_f)?);
    report.record_error(err, tolerance::COEFF_REL, || Violation {
        note: "operator shift".into(),
        ..Violation::coefficient(power, err)
    });
    let (power, err) = worst_coefficient(&omega(op, params, f)?, &omega(&up, params, &big_f)?);
    report.record_error(err, tolerance::COEFF_REL, || Violation {
        note: "omega shift".into(),
        ..Violation::coefficient(power, err)
    });
    Ok(report)
}
