use gft_core::verify::{preset, run_implication_trial, TrialRunner, PRESET_IDS};
use gft_core::{SamplingGrid, TruncatedSeries};

fn quick(id: &str, trials: usize) -> gft_core::verify::TrialConfig {
    let mut config = preset(id).unwrap();
    config.trials = trials;
    config.grid = SamplingGrid::new(vec![0.3, 0.6, 0.9, 0.95], 180).unwrap();
    config
}

#[test]
fn presets_have_no_violations_on_a_coarse_run() {
    for id in PRESET_IDS {
        let report = run_implication_trial(&quick(id, 30)).unwrap();
        assert!(report.pass, "{id}: {:?}", report.violations);
        assert!(report.hypothesis_hold_count.unwrap() > 0, "{id}");
    }
}

#[test]
fn stress_decay_only_skips_trials() {
    let mut config = quick("elm1.1", 40);
    config.rho = 0.2;
    let report = run_implication_trial(&config).unwrap();
    assert!(report.pass, "{:?}", report.violations);
    let margins = report.margins.unwrap();
    assert!(margins.skipped > 0);
    assert_eq!(margins.skipped + report.hypothesis_hold_count.unwrap(), 40);
}

#[test]
fn runs_repeat_exactly_and_depend_on_the_seed() {
    let config = quick("u1", 12);
    let a = serde_json::to_string(&run_implication_trial(&config).unwrap()).unwrap();
    let b = serde_json::to_string(&run_implication_trial(&config).unwrap()).unwrap();
    assert_eq!(a, b);
    let mut other = config.clone();
    other.seed = 8;
    let c = serde_json::to_string(&run_implication_trial(&other).unwrap()).unwrap();
    assert_ne!(a, c);
}

#[test]
fn identity_function_holds_trivially() {
    let config = preset("ex2").unwrap();
    let outcome = TrialRunner::new(&config).unwrap().evaluate(&TruncatedSeries::monomial(1, 64)).unwrap();
    assert!(outcome.hypothesis_holds());
    assert!(outcome.conclusion.unwrap().holds);
}
