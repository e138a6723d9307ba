//! Acceptance criteria AC1-AC7, each run at its stated tolerance.

use std::process::Command;
use std::time::{Duration, Instant};

use gft_core::regions::class_check;
use gft_core::verify::{self, random_function, IdentitySuite};
use gft_core::{ClassId, Complex64, MultiplierOperator, QVariant, SamplingGrid, TruncatedSeries, VerificationReport};

struct Outcome {
    pass: bool,
    summary: String,
}

type Check = fn() -> Outcome;

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome { pass, summary: summary.into() }
}

fn identity_reports() -> (Vec<VerificationReport>, Duration) {
    let start = Instant::now();
    let reports = verify::run_identity_suite(&IdentitySuite::default()).expect("suite runs");
    (reports, start.elapsed())
}

fn max_error(reports: &[VerificationReport], ids: &[String]) -> Result<f64, String> {
    ids.iter().try_fold(0.0f64, |acc, id| {
        let r = reports.iter().find(|r| &r.id == id).ok_or(format!("missing report {id}"))?;
        Ok(acc.max(r.max_error.unwrap_or(f64::INFINITY)))
    })
}

fn ac1_recurrences() -> Outcome {
    let (reports, elapsed) = identity_reports();
    let ids: Vec<String> = ["H", "I", "J", "T", "Q"].iter().map(|t| format!("recurrence:{t}")).collect();
    match max_error(&reports, &ids) {
        Ok(err) => outcome(
            err <= 1e-9 && elapsed <= Duration::from_secs(5),
            format!("max relative error {err:.2e} over 5 families x 50 trials, {elapsed:.2?}"),
        ),
        Err(e) => outcome(false, e),
    }
}

fn ac2_printed_q() -> Outcome {
    let f = random_function(2, 64, 0.3, 7).unwrap();
    let printed = MultiplierOperator::q_liu(3.0, 0.5, 2, QVariant::Printed).unwrap().recurrence_check(&f);
    let fixed = MultiplierOperator::q_liu(3.0, 0.5, 2, QVariant::IdentityConsistent).unwrap().recurrence_check(&f);
    let (bad, good) = (printed.max_error.unwrap(), fixed.max_error.unwrap());
    outcome(bad >= 0.1 && good <= 1e-10, format!("printed variant {bad:.3}, consistent variant {good:.2e}"))
}

fn ac3_proof_identities() -> Outcome {
    let (reports, _) = identity_reports();
    let mut ids = Vec::new();
    for tag in ["H", "I", "J", "T", "Q"] {
        ids.push(format!("omega-log-derivative:{tag}"));
        ids.push(format!("theorem1-phi:{tag}"));
        ids.push(format!("bernardi-differential:{tag}"));
    }
    for tag in ["I", "T"] {
        ids.push(format!("theorem2-psi:{tag}"));
        ids.push(format!("theorem5-shift:{tag}"));
    }
    match max_error(&reports, &ids) {
        Ok(err) => outcome(err <= 1e-9, format!("max relative error {err:.2e} over {} identity reports", ids.len())),
        Err(e) => outcome(false, e),
    }
}

fn ac4_constants() -> Outcome {
    let report = verify::reproduce_constants();
    let detail = |name: &str| report.details.iter().find(|d| d.name == name);
    let checks: [(&str, f64); 6] = [
        ("k_min", 1e-9),
        ("sqrt_k_min", 1e-9),
        ("lemniscate_bound", 1e-12),
        ("delta_h_mu1_nu1_eta0.25", 1e-6),
        ("delta_h_mu1_nu1_eta0.5", 1e-6),
        ("delta_h_mu1_nu1_eta1", 1e-6),
    ];
    let mut worst = String::new();
    let mut pass = true;
    for (name, tol) in checks {
        match detail(name) {
            Some(d) => {
                let err = (d.computed - d.reference.unwrap_or(f64::NAN)).abs();
                pass &= err <= tol;
                worst.push_str(&format!("{name}={:.10} ({err:.1e}) ", d.computed));
            }
            None => {
                pass = false;
                worst.push_str(&format!("{name} missing "));
            }
        }
    }
    outcome(pass, worst.trim_end().to_string())
}

fn ac5_trials() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ["ex2", "ex1.2", "c1.14", "u1", "elm1.1", "ex1.1"] {
        let config = verify::preset(id).unwrap();
        assert_eq!((config.trials, config.rho, config.seed), (200, 0.08, 7));
        let report = verify::run_implication_trial(&config).unwrap();
        let holds = report.hypothesis_hold_count.unwrap_or(0);
        let violations = report.violations.len();
        pass &= report.pass && violations == 0 && holds >= 50;
        parts.push(format!("{id}: {holds} held/{violations} violations"));
    }
    let elapsed = start.elapsed();
    pass &= elapsed <= Duration::from_secs(60);
    outcome(pass, format!("{}; {elapsed:.2?}", parts.join(", ")))
}

fn ac6_class_checker() -> Outcome {
    let grid = SamplingGrid::default();
    // Koebe z/(1-z)^2; N = 256 keeps the truncation error at r = 0.95 below 1e-3.
    let koebe = TruncatedSeries::from_fn(1, 256, |n| Complex64::new(n as f64, 0.0));
    let s0 = class_check(&koebe, &"S*:0".parse().unwrap(), &grid).unwrap();
    let s06 = class_check(&koebe, &"S*:0.6".parse().unwrap(), &grid).unwrap();
    let identity = TruncatedSeries::monomial(1, 64);
    let classes = ["R:0.5", "S*:0.5", "Sr*:0.5", "S*[A,B]:0.5,-0.5", "SS*:0.5", "SL:0.5"];
    let identity_ok = classes.iter().all(|c| {
        let class: ClassId = c.parse().unwrap();
        class_check(&identity, &class, &grid).map(|v| v.holds && v.margin() >= 1e-3).unwrap_or(false)
    });
    let pass = s0.holds && s0.margin() >= 1e-3 && !s06.holds && s06.margin() <= -1e-3 && identity_ok;
    outcome(
        pass,
        format!(
            "Koebe S*(0) margin {:.4}, S*(0.6) margin {:.4}, f = z in all {} classes: {identity_ok}",
            s0.margin(),
            s06.margin(),
            classes.len()
        ),
    )
}

fn ac7_determinism() -> Outcome {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_gft")).args(args).env_remove("GFT_SEED").output().expect("gft runs")
    };
    let mut pass = true;
    let mut sizes = Vec::new();
    for args in [&["verify", "ex2", "--seed", "7"][..], &["verify", "identities", "--seed", "7"][..]] {
        let (a, b) = (run(args), run(args));
        pass &= a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
        sizes.push(format!("{} ({} bytes)", args[1], a.stdout.len()));
    }
    outcome(pass, format!("byte-identical reports for {}", sizes.join(", ")))
}

fn main() {
    let criteria: [(&str, Check); 7] = [
        ("AC1 recurrence identities", ac1_recurrences),
        ("AC2 printed Q discrepancy", ac2_printed_q),
        ("AC3 proof identities", ac3_proof_identities),
        ("AC4 constants", ac4_constants),
        ("AC5 implication trials", ac5_trials),
        ("AC6 class checker", ac6_class_checker),
        ("AC7 determinism", ac7_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.summary);
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
