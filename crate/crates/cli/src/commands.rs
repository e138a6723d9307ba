use std::fmt::Write as _;

use gft_core::omega::{alpha_next, chi_theorem1, chi_theorem2, omega, phi_theorem1, psi_theorem2};
use gft_core::regions::{boundary_csv, boundary_curve, class_check, subordinate_to};
use gft_core::transforms::bernardi;
use gft_core::verify::{self, IdentitySuite, TrialConfig, PRESET_IDS};
use gft_core::{
    BernardiParams, ClassId, Complex64, DominantRegion, DominantSpec, OmegaParams, SamplingGrid,
    VerificationReport, DEFAULT_ORDER,
};

use crate::args::{BoundaryFormat, Cli, Command, Exponents, GlobalOpts, TheoremArg, VerifyArgs};
use crate::io::{emit, read_operator, read_series, to_json, CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success = 0,
    Failed = 1,
}

impl From<bool> for Outcome {
    fn from(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::Failed
        }
    }
}

fn order(g: &GlobalOpts) -> Option<usize> {
    g.order.map(usize::from)
}

fn grid(g: &GlobalOpts) -> CliResult<SamplingGrid> {
    let default = SamplingGrid::default();
    if g.radii.is_none() && g.angles.is_none() {
        return Ok(default);
    }
    let radii = g.radii.clone().unwrap_or_else(|| default.radii().to_vec());
    Ok(SamplingGrid::new(radii, g.angles.unwrap_or(default.angular_samples()))?)
}

fn exponents(e: &Exponents) -> CliResult<OmegaParams> {
    Ok(OmegaParams::new(e.mu, e.nu)?)
}

/// `re` or `re,im`.
fn parse_complex(s: &str) -> CliResult<Complex64> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| CliError::Usage(format!("not a number: {t:?}")));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(CliError::Usage(format!("expected `re` or `re,im`, got {s:?}"))),
    }
}

fn put<T: serde::Serialize>(g: &GlobalOpts, value: &T) -> CliResult<()> {
    emit(&to_json(value, g.pretty), g.output.as_deref())
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    let out = g.output.as_deref();
    match &cli.command {
        Command::Apply { target } => {
            let op = read_operator(&target.op)?;
            let f = read_series(&target.input, order(g))?;
            put(g, &op.apply(&f)?)?;
        }
        Command::Bernardi { input, alpha, op } => {
            let f = read_series(input, order(g))?;
            let alpha = match (alpha, op) {
                (Some(a), _) => parse_complex(a)?,
                (None, Some(op)) => read_operator(op)?.alpha(),
                (None, None) => return Err(CliError::Usage("need --alpha or --op".into())),
            };
            put(g, &bernardi(&f, &BernardiParams::new(alpha, f.base_power()))?)?;
        }
        Command::Omega { target, exponents: e } => {
            let op = read_operator(&target.op)?;
            let f = read_series(&target.input, order(g))?;
            put(g, &omega(&op, &exponents(e)?, &f)?)?;
        }
        Command::Phi { target, exponents: e, scaled } => {
            let op = read_operator(&target.op)?;
            let f = read_series(&target.input, order(g))?;
            let mut phi = phi_theorem1(&op, &exponents(e)?, &f)?;
            if *scaled {
                phi = phi.scale(alpha_next(&op)?);
            }
            put(g, &phi)?;
        }
        Command::Psi { target, exponents: e, transformed } => {
            let op = read_operator(&target.op)?;
            let f = read_series(&target.input, order(g))?;
            let big_f = match transformed {
                Some(src) => read_series(src, order(g))?,
                None => bernardi(&f, &BernardiParams::new(op.alpha(), op.p()))?,
            };
            put(g, &psi_theorem2(&op, &exponents(e)?, &f, &big_f)?)?;
        }
        Command::Chi { op, dominant, exponents: e, theorem } => {
            let op = read_operator(op)?;
            let dominant: DominantSpec = dominant.parse()?;
            let n = order(g).unwrap_or(DEFAULT_ORDER);
            let (a, a1) = (op.alpha(), alpha_next(&op)?);
            let chi = match theorem {
                TheoremArg::One => chi_theorem1(&dominant, a, a1, &exponents(e)?, n)?,
                TheoremArg::Two => chi_theorem2(&dominant, a, a1, &exponents(e)?, n),
            };
            put(g, &chi)?;
        }
        Command::CheckClass { input, class } => {
            let f = read_series(input, order(g))?;
            let class: ClassId = class.parse()?;
            let verdict = class_check(&f, &class, &grid(g)?)?;
            put(g, &verdict)?;
            return Ok(verdict.holds.into());
        }
        Command::Subordinate { input, region } => {
            let q = read_series(input, order(g))?;
            let region: DominantRegion = region.parse()?;
            let verdict = subordinate_to(&q, &region, &grid(g)?)?;
            put(g, &verdict)?;
            return Ok(verdict.holds.into());
        }
        Command::Verify(args) => return verify_cmd(args, g),
        Command::Constants => {
            let report = verify::reproduce_constants();
            emit(&constants_table(&report), out)?;
            return Ok(report.pass.into());
        }
        Command::Boundary { region, points, format } => {
            let region: DominantRegion = region.parse()?;
            let curve = boundary_curve(&region, *points)?;
            match format {
                BoundaryFormat::Csv => emit(&boundary_csv(&curve), out)?,
                BoundaryFormat::Json => put(g, &curve)?,
            }
        }
    }
    Ok(Outcome::Success)
}

fn verify_cmd(args: &VerifyArgs, g: &GlobalOpts) -> CliResult<Outcome> {
    let out = g.output.as_deref();
    match args.id.as_str() {
        "identities" => {
            let defaults = IdentitySuite::default();
            let suite = IdentitySuite {
                operators: args.op.iter().map(|s| read_operator(s)).collect::<CliResult<_>>()?,
                trials: args.trials.unwrap_or(defaults.trials),
                seed: args.seed,
                order: order(g).unwrap_or(defaults.order),
                rho: args.rho.unwrap_or(defaults.rho),
            };
            let reports = verify::run_identity_suite(&suite)?;
            emit(&to_json(&reports, g.pretty), out)?;
            Ok(reports.iter().all(VerificationReport::as_expected).into())
        }
        "constants" => {
            let report = verify::reproduce_constants();
            emit(&to_json(&report, g.pretty), out)?;
            Ok(report.pass.into())
        }
        "trials" => {
            let reports = PRESET_IDS
                .iter()
                .map(|id| trial(id, args, g))
                .collect::<CliResult<Vec<_>>>()?;
            emit(&to_json(&reports, g.pretty), out)?;
            Ok(reports.iter().all(|r| r.pass).into())
        }
        id if PRESET_IDS.contains(&id) => {
            let report = trial(id, args, g)?;
            emit(&to_json(&report, g.pretty), out)?;
            Ok(report.pass.into())
        }
        other => Err(CliError::Usage(format!(
            "unknown verification {other:?}; expected identities, constants, trials or one of {}",
            PRESET_IDS.join(", ")
        ))),
    }
}

fn trial(id: &str, args: &VerifyArgs, g: &GlobalOpts) -> CliResult<VerificationReport> {
    let mut config: TrialConfig = verify::preset(id)?;
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    if let Some(rho) = args.rho {
        config.rho = rho;
    }
    if let Some(n) = order(g) {
        config.order = n;
    }
    config.seed = args.seed;
    config.grid = grid(g)?;
    config.superordination = args.superordination;
    let report = verify::run_implication_trial(&config)?;
    log::info!(
        "{id}: {} of {} hypotheses held, {} violations",
        report.hypothesis_hold_count.unwrap_or(0),
        config.trials,
        report.violations.len()
    );
    Ok(report)
}

fn constants_table(report: &VerificationReport) -> String {
    let width = report.details.iter().map(|d| d.name.len()).max().unwrap_or(4);
    let mut s = format!("{:width$}  {:>22}  {:>22}  {:>9}  ok\n", "name", "computed", "reference", "error");
    for d in &report.details {
        let (reference, err) = match d.reference {
            Some(r) => (format!("{r:.15}"), format!("{:.2e}", (d.computed - r).abs())),
            None => ("-".into(), "-".into()),
        };
        let _ = writeln!(s, "{:width$}  {:>22.15}  {reference:>22}  {err:>9}  {}", d.name, d.computed, if d.pass { "yes" } else { "NO" });
    }
    s
}
