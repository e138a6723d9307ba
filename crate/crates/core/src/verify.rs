//! Verification harness: exact identity suites over random inputs, sampled
//! implication trials for the subordination theorems, and the table of
//! boundary constants.
//!
//! Every random draw is derived from a `u64` seed through ChaCha8, and trial
//! `i` gets its own stream (`seed ^ i * golden`), so a run is reproducible
//! regardless of how trials are scheduled across threads.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::omega::{
    alpha_next, log_derivative_sides, omega, phi_identity_sides, phi_theorem1, psi_identity_sides, psi_theorem2,
    DominantSpec, OmegaParams,
};
use crate::operators::{FamilyTag, HypergeometricParams, MultiplierOperator, QVariant};
use crate::regions::{
    self, sample_verdict, subordinate_to, CurveRegion, DominantRegion, Membership, SamplingGrid,
};
use crate::report::{MarginSummary, ReportKind, SuperordinationSummary, VerificationReport, Violation};
use crate::series::{worst_coefficient, TruncatedSeries};
use crate::transforms::{bernardi, bernardi_differential_sides, BernardiParams};
use crate::{tolerance, DEFAULT_ORDER};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 7;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Independent seed for trial `i`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64).wrapping_mul(GOLDEN_GAMMA)
}

/// Uniform point of the closed unit disk.
fn unit_disk(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, 2.0 * PI * rng.gen::<f64>())
}

/// `z^p + sum_{n>p} rho^(n-p) u_n z^n` with `u_n` uniform in the unit disk.
pub fn random_function(p: usize, order: usize, rho: f64, seed: u64) -> Result<TruncatedSeries> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::InvalidParameter(format!("decay rho must lie in (0, 1), got {rho}")));
    }
    if order < p {
        return Err(Error::InvalidParameter(format!("order {order} below base power {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scale = 1.0;
    let coeffs = (p..=order)
        .map(|n| {
            if n == p {
                return Complex64::new(1.0, 0.0);
            }
            scale *= rho;
            unit_disk(&mut rng) * scale
        })
        .collect();
    TruncatedSeries::new(p, coeffs)
}

// --- Identity suite ---------------------------------------------------------

/// Largest `t <= 1` such that every operator image entering Omega and Psi,
/// `L^{a+j} g / z^p` for `g = z^p + t (f - z^p)` and its integral transform,
/// differs from 1 by coefficients of total modulus at most 1/2.
///
/// Such images are bounded away from zero on the closed disk, so their
/// logarithms are analytic there and the identity checks compare well
/// conditioned series. Without it, polynomially growing multipliers can put a
/// zero inside the disk and the top coefficients lose digits to cancellation.
pub fn admissible_scale(op: &MultiplierOperator, f: &TruncatedSeries) -> Result<f64> {
    let p = op.p();
    let tail = f.sub(&TruncatedSeries::monomial(p, f.order()));
    let transformed = match BernardiParams::new(op.alpha(), p).validate(f.order()) {
        Ok(()) => Some(bernardi(&tail, &BernardiParams::new(op.alpha(), p))?),
        Err(_) => None,
    };
    let mut worst: f64 = 0.0;
    for j in 0..=2 {
        let Ok(shifted) = op.shift_index(j) else { continue };
        for g in std::iter::once(&tail).chain(transformed.as_ref()) {
            let norm: f64 = shifted.apply(g)?.coeffs().iter().map(|c| c.norm()).sum();
            worst = worst.max(norm);
        }
    }
    Ok(if worst > 0.5 { 0.5 / worst } else { 1.0 })
}

/// `f` with its perturbation scaled by [`admissible_scale`].
fn admissible(op: &MultiplierOperator, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let t = admissible_scale(op, f)?;
    let p = op.p();
    Ok(f.map(|n, a| if n == p { a } else { a * t }))
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

/// Complex parameter with real part in `[lo, hi]` and an imaginary part kept
/// away from zero, so shifted indices never land near a pole.
fn complex_param(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    let im = uniform(rng, 0.2, 1.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
    Complex64::new(uniform(rng, lo, hi), im)
}

fn random_hypergeometric(rng: &mut ChaCha8Rng) -> Result<HypergeometricParams> {
    let l = rng.gen_range(1..=2);
    let m = rng.gen_range(l - 1..=l);
    let alphas = (0..l).map(|_| complex_param(rng, 0.5, 3.0)).collect();
    let betas = (0..m).map(|_| complex_param(rng, 0.5, 3.0)).collect();
    HypergeometricParams::new(alphas, betas)
}

/// Random admissible operator of the given family. Q indices stay at least 2
/// so both raised operators needed by the Theorem 1 functional exist.
pub fn random_operator(tag: FamilyTag, p: usize, rng: &mut ChaCha8Rng) -> Result<MultiplierOperator> {
    let kappa = |rng: &mut ChaCha8Rng| uniform(rng, 0.5, 3.0);
    match tag {
        FamilyTag::H => MultiplierOperator::dziok_srivastava(random_hypergeometric(rng)?, p),
        FamilyTag::J => {
            let params = random_hypergeometric(rng)?;
            MultiplierOperator::j_kappa(params, kappa(rng), p)
        }
        FamilyTag::I => {
            let r = rng.gen_range(-3..=3);
            let lambda = Complex64::new(uniform(rng, 0.0, 3.0), uniform(rng, -1.0, 1.0));
            MultiplierOperator::multiplier_transform(r, lambda, p)
        }
        FamilyTag::T => {
            let r = rng.gen_range(-3..=3);
            let lambda = Complex64::new(uniform(rng, 0.0, 3.0), uniform(rng, -1.0, 1.0));
            MultiplierOperator::t_kappa(r, lambda, kappa(rng), p)
        }
        FamilyTag::Q => {
            let alpha = uniform(rng, 2.0, 5.0);
            let beta = uniform(rng, -0.9, 3.0);
            MultiplierOperator::q_liu(alpha, beta, p, QVariant::IdentityConsistent)
        }
    }
}

fn random_exponents(rng: &mut ChaCha8Rng) -> OmegaParams {
    loop {
        let (mu, nu) = (uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5));
        if let Ok(params) = OmegaParams::new(mu, nu) {
            return params;
        }
    }
}

/// The algebraic identities checked on each random input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    /// `z(L^a f)' = alpha_a L^{a+1} f - (alpha_a - p) L^a f`.
    Recurrence,
    /// Logarithmic derivative of Omega.
    LogDerivative,
    /// `alpha_{a+1} Phi = (alpha_{a+1} mu - alpha_a nu) q + z q'`.
    Theorem1Phi,
    /// `Psi = (mu alpha_{a+1} - nu alpha_a) q + z q'`, `q = Omega(F)`.
    Theorem2Psi,
    /// `alpha f = (alpha - p) F + z F'`.
    BernardiDifferential,
    /// `L^a f = L^{a+1} F` and `Omega^a(f) = Omega^{a+1}(F)`.
    Theorem5Shift,
}

impl IdentityCheck {
    pub const ALL: [IdentityCheck; 6] = [
        IdentityCheck::Recurrence,
        IdentityCheck::LogDerivative,
        IdentityCheck::Theorem1Phi,
        IdentityCheck::Theorem2Psi,
        IdentityCheck::BernardiDifferential,
        IdentityCheck::Theorem5Shift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityCheck::Recurrence => "recurrence",
            IdentityCheck::LogDerivative => "omega-log-derivative",
            IdentityCheck::Theorem1Phi => "theorem1-phi",
            IdentityCheck::Theorem2Psi => "theorem2-psi",
            IdentityCheck::BernardiDifferential => "bernardi-differential",
            IdentityCheck::Theorem5Shift => "theorem5-shift",
        }
    }

    /// Whether the check applies to `op` at all.
    pub fn applies_to(self, op: &MultiplierOperator) -> bool {
        match self {
            IdentityCheck::Recurrence => true,
            IdentityCheck::Theorem5Shift => op.alpha_independent_of_index(),
            // Everything else is derived from the recurrence and meaningless
            // for an operator that does not satisfy it.
            _ => !is_printed_q(op),
        }
    }

    /// Whether the identity is known not to hold for `op`.
    ///
    /// The Theorem 2 reduction uses `L^{a+1} f = L^{a+2} F`, which needs
    /// `alpha_{a+1} = alpha_a`; only I and T have an index-free alpha.
    pub fn expected_to_fail(self, op: &MultiplierOperator) -> bool {
        match self {
            IdentityCheck::Recurrence => is_printed_q(op),
            IdentityCheck::Theorem2Psi => !op.alpha_independent_of_index(),
            _ => false,
        }
    }
}

fn is_printed_q(op: &MultiplierOperator) -> bool {
    matches!(op.family(), crate::operators::Family::Q { variant: QVariant::Printed, .. })
}

/// Worst coefficient error of one identity on one input, as `(power, error)`.
/// The shift identity reports the larger of its two parts.
pub fn identity_error(
    check: IdentityCheck,
    op: &MultiplierOperator,
    params: &OmegaParams,
    f: &TruncatedSeries,
) -> Result<(usize, f64)> {
    let sides = match check {
        IdentityCheck::Recurrence => {
            let la = op.apply(f)?;
            let alpha = op.alpha();
            let rhs = op.shift_index(1)?.apply(f)?.scale(alpha).sub(&la.scale(alpha - op.p() as f64));
            (la.z_derivative(), rhs)
        }
        IdentityCheck::LogDerivative => log_derivative_sides(op, params, f)?,
        IdentityCheck::Theorem1Phi => phi_identity_sides(op, params, f)?,
        IdentityCheck::Theorem2Psi => {
            let big_f = bernardi(f, &BernardiParams::new(op.alpha(), op.p()))?;
            psi_identity_sides(op, params, f, &big_f)?
        }
        IdentityCheck::BernardiDifferential => {
            bernardi_differential_sides(f, &BernardiParams::new(op.alpha(), op.p()))?
        }
        IdentityCheck::Theorem5Shift => {
            let big_f = bernardi(f, &BernardiParams::new(op.alpha(), op.p()))?;
            let up = op.shift_index(1)?;
            let first = worst_coefficient(&op.apply(f)?, &up.apply(&big_f)?);
            let second = worst_coefficient(&omega(op, params, f)?, &omega(&up, params, &big_f)?);
            return Ok(if second.1 > first.1 { second } else { first });
        }
    };
    Ok(worst_coefficient(&sides.0, &sides.1))
}

/// Settings of [`run_identity_suite`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentitySuite {
    /// Operators to test. When empty, each family gets fresh random
    /// parameters on every trial, plus the printed Q variant.
    ///
    /// Random inputs are drawn with decay `rho` and then pulled towards `z^p`
    /// by [`admissible_scale`], per operator.
    #[serde(default)]
    pub operators: Vec<MultiplierOperator>,
    pub trials: usize,
    pub seed: u64,
    pub order: usize,
    pub rho: f64,
}

impl Default for IdentitySuite {
    fn default() -> Self {
        Self { operators: Vec::new(), trials: 50, seed: DEFAULT_SEED, order: DEFAULT_ORDER, rho: 0.3 }
    }
}

/// One row of the suite: a check on a family (or on one given operator).
struct SuiteRow {
    label: String,
    check: IdentityCheck,
    expected_failure: bool,
    report: VerificationReport,
}

impl SuiteRow {
    fn new(label: String, check: IdentityCheck, expected_failure: bool, echo: serde_json::Value) -> Self {
        let mut report = VerificationReport::new(format!("{}:{label}", check.name()), ReportKind::Identity);
        report.expected_failure = expected_failure;
        report.config_echo = echo;
        Self { label, check, expected_failure, report }
    }

    fn record(&mut self, trial: usize, op: &MultiplierOperator, params: &OmegaParams, f: &TruncatedSeries) {
        let tol = match self.check {
            IdentityCheck::Recurrence => tolerance::COEFF_REL,
            _ => tolerance::IDENTITY,
        };
        match identity_error(self.check, op, params, f) {
            Ok((power, err)) => self.report.record_error(err, tol, || Violation {
                trial: Some(trial),
                ..Violation::coefficient(power, err)
            }),
            Err(e) => self.report.fail(Violation { trial: Some(trial), ..Violation::note(e.to_string()) }),
        }
    }
}

/// Runs every applicable identity on `trials` random inputs. Valences cycle
/// through 1, 2, 3 when operators are drawn at random.
pub fn run_identity_suite(suite: &IdentitySuite) -> Result<Vec<VerificationReport>> {
    if suite.trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let echo = |label: &str| {
        serde_json::json!({ "family": label, "trials": suite.trials, "seed": suite.seed, "N": suite.order, "rho": suite.rho })
    };
    let mut rows = Vec::new();
    if suite.operators.is_empty() {
        for tag in FamilyTag::ALL {
            for check in IdentityCheck::ALL {
                let applies = match check {
                    IdentityCheck::Theorem5Shift => matches!(tag, FamilyTag::I | FamilyTag::T),
                    _ => true,
                };
                if applies {
                    let expected = check == IdentityCheck::Theorem2Psi && !matches!(tag, FamilyTag::I | FamilyTag::T);
                    rows.push(SuiteRow::new(tag.to_string(), check, expected, echo(tag.as_str())));
                }
            }
        }
        rows.push(SuiteRow::new("Q-printed".into(), IdentityCheck::Recurrence, true, echo("Q-printed")));
        for trial in 0..suite.trials {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(suite.seed, trial));
            let p = 1 + trial % 3;
            let params = random_exponents(&mut rng);
            let f = random_function(p, suite.order, suite.rho, rng.gen())?;
            let ops: Vec<(String, MultiplierOperator)> = FamilyTag::ALL
                .iter()
                .map(|&tag| random_operator(tag, p, &mut rng).map(|op| (tag.to_string(), op)))
                .collect::<Result<_>>()?;
            let printed = match ops.last().map(|(_, op)| op.family()) {
                Some(crate::operators::Family::Q { alpha, beta, .. }) => {
                    MultiplierOperator::q_liu(*alpha, *beta, p, QVariant::Printed)?
                }
                _ => unreachable!("Q is the last family"),
            };
            let inputs: Vec<TruncatedSeries> =
                ops.iter().map(|(_, op)| admissible(op, &f)).collect::<Result<_>>()?;
            for row in rows.iter_mut() {
                match ops.iter().position(|(label, _)| *label == row.label) {
                    Some(k) => row.record(trial, &ops[k].1, &params, &inputs[k]),
                    None => row.record(trial, &printed, &params, &f),
                }
            }
        }
    } else {
        for (k, op) in suite.operators.iter().enumerate() {
            let label = format!("{}#{k}", op.tag());
            for check in IdentityCheck::ALL.into_iter().filter(|c| c.applies_to(op)) {
                let echo = serde_json::json!({ "operator": op, "trials": suite.trials, "seed": suite.seed, "N": suite.order, "rho": suite.rho });
                rows.push(SuiteRow::new(label.clone(), check, check.expected_to_fail(op), echo));
            }
        }
        for trial in 0..suite.trials {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(suite.seed, trial));
            let params = random_exponents(&mut rng);
            let f_seed: u64 = rng.gen();
            let mut idx = 0;
            for (k, op) in suite.operators.iter().enumerate() {
                let f = admissible(op, &random_function(op.p(), suite.order, suite.rho, f_seed)?)?;
                let label = format!("{}#{k}", op.tag());
                while idx < rows.len() && rows[idx].label == label {
                    rows[idx].record(trial, op, &params, &f);
                    idx += 1;
                }
            }
        }
    }
    Ok(rows
        .into_iter()
        .map(|row| {
            debug_assert_eq!(row.report.expected_failure, row.expected_failure);
            row.report
        })
        .collect())
}

// --- Implication trials -----------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Hypothesis on `alpha_{a+1} Phi(f)`, conclusion `Omega(f) ≺ psi`.
    Theorem1,
    /// Hypothesis on `Psi(f, F)`, conclusion `Omega(F) ≺ psi`.
    Theorem2,
}

/// Where the hypothesis functional must map the grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Hypothesis {
    /// Inside the closed curve `c psi(r e^{it}) + r e^{it} psi'(r e^{it})`.
    ChiCurve,
    /// Inside a region known to lie in the image of that function.
    Region(DominantRegion),
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::ChiCurve => f.write_str("chi-curve"),
            Hypothesis::Region(r) => r.fmt(f),
        }
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "chi-curve" {
            Ok(Hypothesis::ChiCurve)
        } else {
            Ok(Hypothesis::Region(s.parse()?))
        }
    }
}

impl Serialize for Hypothesis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Hypothesis {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub id: String,
    pub theorem: Theorem,
    pub operator: MultiplierOperator,
    pub omega: OmegaParams,
    pub dominant: DominantSpec,
    pub hypothesis: Hypothesis,
    pub trials: usize,
    pub rho: f64,
    pub seed: u64,
    #[serde(rename = "N")]
    pub order: usize,
    pub grid: SamplingGrid,
    /// Radius of the circle whose image is the hypothesis curve.
    pub chi_radius: f64,
    pub curve_points: usize,
    /// Also run the reversed containment heuristic.
    #[serde(default)]
    pub superordination: bool,
}

/// Identifiers accepted by [`preset`].
pub const PRESET_IDS: [&str; 7] = ["ex2", "ex1.2", "c1.14", "u1", "elm1.1", "ex1.1", "thm2-janowski-i"];

impl TrialConfig {
    pub fn new(
        id: impl Into<String>,
        theorem: Theorem,
        operator: MultiplierOperator,
        omega: OmegaParams,
        dominant: DominantSpec,
        hypothesis: Hypothesis,
    ) -> Self {
        Self {
            id: id.into(),
            theorem,
            operator,
            omega,
            dominant,
            hypothesis,
            trials: 200,
            rho: 0.08,
            seed: DEFAULT_SEED,
            order: DEFAULT_ORDER,
            grid: SamplingGrid::default(),
            chi_radius: 0.98,
            curve_points: 2048,
            superordination: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("need at least one trial".into()));
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return Err(Error::InvalidParameter(format!("decay rho must lie in (0, 1), got {}", self.rho)));
        }
        if !(self.chi_radius > 0.0 && self.chi_radius < 1.0) || self.curve_points < 16 {
            return Err(Error::InvalidParameter("hypothesis curve needs 0 < r < 1 and at least 16 points".into()));
        }
        if self.order <= self.operator.p() {
            return Err(Error::InvalidParameter(format!("order {} too small", self.order)));
        }
        Ok(())
    }
}

/// `H` with `alpha_1 = 1` and every other numerator cancelled: the identity
/// operator, raised to `f -> z f'`.
fn identity_chain() -> MultiplierOperator {
    let params = HypergeometricParams::new(vec![Complex64::new(1.0, 0.0)], vec![]).expect("valid");
    MultiplierOperator::dziok_srivastava(params, 1).expect("valid")
}

/// Ready-made trial configurations for the examples the harness knows.
pub fn preset(id: &str) -> Result<TrialConfig> {
    let one_one = OmegaParams::new(1.0, 1.0)?;
    let h = identity_chain();
    let i = MultiplierOperator::identity(1)?;
    let region = |r: Result<DominantRegion>| r.map(Hypothesis::Region);
    let config = match id {
        // (zf'/f)(2 - zf'/f + zf''/f') ≺ psi + z psi' with psi Janowski(1/2, -1/2).
        "ex2" => TrialConfig::new(id, Theorem::Theorem1, h, one_one, DominantSpec::janowski(0.5, -0.5)?, Hypothesis::ChiCurve),
        // Re (zf'/f)(1 - zf'/f + zf''/f') > -1/2 gives starlikeness.
        "ex1.2" => TrialConfig::new(
            id,
            Theorem::Theorem1,
            i,
            one_one,
            DominantSpec::half_plane_map(0.0)?,
            region(DominantRegion::half_plane(regions::parabola_threshold_b(0.0, 0.0)))?,
        ),
        // Re (zf'/f)(2 - zf'/f + zf''/f') > 0 gives starlikeness of order 1/3.
        "c1.14" => TrialConfig::new(
            id,
            Theorem::Theorem1,
            h,
            one_one,
            DominantSpec::half_plane_map(1.0 / 3.0)?,
            region(DominantRegion::half_plane(regions::parabola_threshold(1.0 / 3.0, 1.0, 1.0)))?,
        ),
        // Re (2f' + zf'') > 3/4 gives Re f' > 1/2.
        "u1" => TrialConfig::new(
            id,
            Theorem::Theorem1,
            h,
            OmegaParams::new(1.0, 0.0)?,
            DominantSpec::half_plane_map(0.5)?,
            region(DominantRegion::half_plane(regions::parabola_threshold(0.5, 1.0, 0.0)))?,
        ),
        // |(zf'/f)(2 - zf'/f + zf''/f')| < sqrt(1.22) gives the lemniscate class.
        "elm1.1" => TrialConfig::new(
            id,
            Theorem::Theorem1,
            h,
            one_one,
            DominantSpec::sqrt_shift(),
            region(DominantRegion::disk(Complex64::new(0.0, 0.0), 1.22f64.sqrt()))?,
        ),
        // |arg (zf'/f)(2 - zf'/f + zf''/f')| < delta pi/2 gives strong starlikeness of order 1/2.
        "ex1.1" => TrialConfig::new(
            id,
            Theorem::Theorem1,
            h,
            one_one,
            DominantSpec::power_sector(0.5)?,
            region(DominantRegion::sector(regions::min_arg_bound(1.0, 1.0, 0.5)?.delta))?,
        ),
        // F' ≺ psi from f'(2 - ...) with the integral transform, psi Janowski(1/2, -1/2).
        "thm2-janowski-i" => TrialConfig::new(
            id,
            Theorem::Theorem2,
            i,
            OmegaParams::new(1.0, 0.0)?,
            DominantSpec::janowski(0.5, -0.5)?,
            Hypothesis::ChiCurve,
        ),
        other => return Err(Error::UnknownId(other.to_string())),
    };
    Ok(config)
}

/// Result of a single trial.
#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub hypothesis_margin: f64,
    pub hypothesis_branch_risk: usize,
    /// Present when the hypothesis held with the safety band.
    pub conclusion: Option<regions::SubordinationVerdict>,
    /// Reverse heuristic: `(premise held, conclusion held)`.
    pub superordination: Option<(bool, bool)>,
}

impl TrialOutcome {
    pub fn hypothesis_holds(&self) -> bool {
        self.hypothesis_branch_risk == 0 && self.hypothesis_margin >= tolerance::SAFETY_BAND
    }

    pub fn is_violation(&self) -> bool {
        self.conclusion.as_ref().is_some_and(|v| !v.holds)
    }
}

/// Precomputed pieces shared by all trials of one configuration.
pub struct TrialRunner<'a> {
    config: &'a TrialConfig,
    alpha_a1: Complex64,
    chi_constant: Complex64,
    points: Vec<Complex64>,
    hypothesis: Box<dyn Membership + Send + 'a>,
    conclusion: DominantRegion,
}

impl<'a> TrialRunner<'a> {
    pub fn new(config: &'a TrialConfig) -> Result<Self> {
        config.validate()?;
        let op = &config.operator;
        let alpha = op.alpha();
        let alpha_a1 = alpha_next(op)?;
        if alpha_a1.norm() == 0.0 {
            return Err(Error::ZeroAlpha);
        }
        let chi_constant = config.omega.mu * alpha_a1 - config.omega.nu * alpha;
        let hypothesis: Box<dyn Membership + Send> = match config.hypothesis {
            Hypothesis::Region(r) => Box::new(r),
            Hypothesis::ChiCurve => {
                let dominant = config.dominant;
                let r = config.chi_radius;
                Box::new(CurveRegion::from_fn(config.curve_points, chi_constant, move |t| {
                    dominant.chi_value(chi_constant, Complex64::from_polar(r, t))
                }))
            }
        };
        Ok(Self {
            config,
            alpha_a1,
            chi_constant,
            points: config.grid.points(),
            hypothesis,
            conclusion: config.dominant.region(),
        })
    }

    /// Hypothesis functional and the function the conclusion is about.
    fn functionals(&self, f: &TruncatedSeries) -> Result<(TruncatedSeries, TruncatedSeries)> {
        let c = self.config;
        match c.theorem {
            Theorem::Theorem1 => {
                let phi = phi_theorem1(&c.operator, &c.omega, f)?.scale(self.alpha_a1);
                Ok((phi, omega(&c.operator, &c.omega, f)?))
            }
            Theorem::Theorem2 => {
                let big_f = bernardi(f, &BernardiParams::new(c.operator.alpha(), c.operator.p()))?;
                let psi = psi_theorem2(&c.operator, &c.omega, f, &big_f)?;
                Ok((psi, omega(&c.operator, &c.omega, &big_f)?))
            }
        }
    }

    /// Runs the implication on one function.
    pub fn evaluate(&self, f: &TruncatedSeries) -> Result<TrialOutcome> {
        let (hyp, q) = self.functionals(f)?;
        let verdict = sample_verdict(&self.points, |z| hyp.eval(z), self.hypothesis.as_ref());
        let mut outcome = TrialOutcome {
            hypothesis_margin: verdict.margin(),
            hypothesis_branch_risk: verdict.branch_risk,
            conclusion: None,
            superordination: None,
        };
        if outcome.hypothesis_holds() {
            outcome.conclusion = Some(subordinate_to(&q, &self.conclusion, &self.config.grid)?);
            if self.config.superordination {
                outcome.superordination = Some(self.reverse_check(&hyp, &q));
            }
        }
        Ok(outcome)
    }

    /// Non-rigorous reversed containment: does the chi image sit inside the
    /// image of the hypothesis functional, and psi inside that of Omega?
    fn reverse_check(&self, hyp: &TruncatedSeries, q: &TruncatedSeries) -> (bool, bool) {
        let r = self.config.chi_radius;
        let n = self.config.curve_points;
        let hyp_curve = CurveRegion::from_fn(n, hyp.eval(Complex64::new(0.0, 0.0)), |t| hyp.eval(Complex64::from_polar(r, t)));
        let dominant = self.config.dominant;
        let premise = sample_verdict(&self.points, |z| dominant.chi_value(self.chi_constant, z), &hyp_curve).holds;
        let q_curve = CurveRegion::from_fn(n, q.eval(Complex64::new(0.0, 0.0)), |t| q.eval(Complex64::from_polar(r, t)));
        let conclusion = premise && sample_verdict(&self.points, |z| dominant.eval(z), &q_curve).holds;
        (premise, conclusion)
    }

    pub fn run_trial(&self, i: usize) -> Result<TrialOutcome> {
        let c = self.config;
        let f = random_function(c.operator.p(), c.order, c.rho, trial_seed(c.seed, i))?;
        self.evaluate(&f)
    }
}

/// Runs all trials of `config` (in parallel) and folds them, in trial order,
/// into one report. A trial is a violation only when its hypothesis held with
/// the safety band and its conclusion failed.
pub fn run_implication_trial(config: &TrialConfig) -> Result<VerificationReport> {
    let runner = TrialRunner::new(config)?;
    let outcomes: Vec<Result<TrialOutcome>> = (0..config.trials).into_par_iter().map(|i| runner.run_trial(i)).collect();

    let mut report = VerificationReport::new(config.id.clone(), ReportKind::Implication);
    report.config_echo = serde_json::to_value(config).unwrap_or_default();
    report.samples_tested = config.trials;
    let mut holds = 0;
    let mut hyp_min: Option<f64> = None;
    let mut concl_min: Option<f64> = None;
    let mut reverse = (0, 0);
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let outcome = match outcome {
            Ok(o) => o,
            Err(e) => {
                report.fail(Violation { trial: Some(i), ..Violation::note(e.to_string()) });
                continue;
            }
        };
        let Some(verdict) = outcome.conclusion else { continue };
        holds += 1;
        hyp_min = Some(hyp_min.map_or(outcome.hypothesis_margin, |m| m.min(outcome.hypothesis_margin)));
        concl_min = Some(concl_min.map_or(verdict.margin(), |m| m.min(verdict.margin())));
        if let Some((premise, conclusion)) = outcome.superordination {
            reverse.0 += premise as usize;
            reverse.1 += conclusion as usize;
        }
        if !verdict.holds {
            let v = match verdict.worst {
                Some(w) => Violation::sample(i, w.z, w.w, w.margin),
                None => Violation { trial: Some(i), ..Violation::note("every conclusion sample was a branch risk") },
            };
            report.fail(v);
        }
    }
    report.hypothesis_hold_count = Some(holds);
    report.margins = Some(MarginSummary {
        hypothesis_min: hyp_min,
        conclusion_min: concl_min,
        skipped: config.trials - holds,
        superordination: config.superordination.then(|| SuperordinationSummary {
            note: "heuristic reversed containment on sampled curves; not a verification".into(),
            premise_held: reverse.0,
            conclusion_held: reverse.1,
        }),
    });
    Ok(report)
}

// --- Constants --------------------------------------------------------------

/// Boundary constants recomputed by search next to their closed forms and the
/// two-decimal values quoted alongside the examples.
pub fn reproduce_constants() -> VerificationReport {
    let mut report = VerificationReport::new("constants", ReportKind::Constant);
    let printed = 0.005;

    let (theta_star, k_min) = regions::min_boundary_modulus_squared_k();
    report.push_detail("k_min", k_min, Some(1.5f64.sqrt()), 1e-9);
    report.push_detail("k_min_two_decimals", k_min, Some(1.22), printed);
    report.push_detail("sqrt_k_min", k_min.sqrt(), Some(1.5f64.sqrt().sqrt()), 1e-9);
    report.push_detail("sqrt_1.22_two_decimals", 1.22f64.sqrt(), Some(1.10), printed);
    report.push_detail("k_argmin", theta_star, Some(2.0 * (1.0f64 / 24.0).sqrt().acos()), 1e-6);
    report.push_detail("k_at_zero", regions::k_theta(0.0), Some(25.0 / 8.0), 1e-15);

    let (_, lem) = regions::lemniscate_bound_i();
    report.push_detail("lemniscate_bound", lem, Some(1.0 / (2.0 * 2f64.sqrt())), 1e-12);
    report.push_detail("lemniscate_bound_two_decimals", lem, Some(0.35), printed);

    // Sector bounds for coefficient b = 2 mu - nu (H) and b = mu - nu (I).
    let cases: [(&str, f64, f64, f64); 5] = [
        ("h_mu1_nu1", 1.0, 1.0, 2.0),
        ("h_mu1_nu0", 1.0, 0.0, 2.0),
        ("h_mu0_num1", 0.0, -1.0, 2.0),
        ("i_mu1_nu0", 1.0, 0.0, 1.0),
        ("i_mu1_nu1", 1.0, 1.0, 1.0),
    ];
    for (name, mu, nu, weight) in cases {
        for eta in [0.25, 0.5, 1.0] {
            let b = weight * mu - nu;
            match regions::min_arg_bound_b(b, eta) {
                Ok(bound) => report.push_detail(format!("delta_{name}_eta{eta}"), bound.numeric, Some(bound.delta), 1e-6),
                Err(e) => report.fail(Violation::note(e.to_string())),
            }
        }
    }
    let closed = 2.0 - 2.0 / PI * 2f64.atan();
    report.push_detail("delta_h_mu1_nu0_eta1_value", closed, Some(1.2952), 1e-4);

    // Half-plane thresholds against the largest real part on the boundary.
    let three = |alpha: f64| (3.0 * alpha - 1.0) / 2.0;
    let five = |alpha: f64| (5.0 * alpha - 1.0) / 2.0;
    let one = |alpha: f64| (alpha - 1.0) / 2.0;
    let thresholds: [(&str, f64, f64, f64); 5] = [
        ("threshold_h_mu1_nu1_alpha1/3", 1.0 / 3.0, 1.0, three(1.0 / 3.0)),
        ("threshold_h_mu1_nu0_alpha1/2", 0.5, 2.0, five(0.5)),
        ("threshold_h_mu0_num1_alpha1/3", 1.0 / 3.0, 1.0, 0.0),
        ("threshold_i_mu1_nu1_alpha0", 0.0, 0.0, one(0.0)),
        ("threshold_i_mu1_nu0_alpha1/2", 0.5, 1.0, three(0.5)),
    ];
    for (name, alpha, b, expected) in thresholds {
        let formula = regions::parabola_threshold_b(alpha, b);
        report.push_detail(name, formula, Some(expected), 1e-15);
        let (_, numeric) = regions::parabola_threshold_numeric(alpha, b);
        report.push_detail(format!("{name}_search"), numeric, Some(formula), 1e-9);
    }
    report.samples_tested = report.details.len();
    report.max_error = report
        .details
        .iter()
        .filter_map(|d| d.reference.map(|r| (d.computed - r).abs()))
        .fold(None, |acc: Option<f64>, e| Some(acc.map_or(e, |a| a.max(e))));
    report
}
