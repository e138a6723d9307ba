use std::process::{Command, Output};

use gft_core::{MultiplierOperator, TruncatedSeries};

const I_1_1_0: &str = r#"{"family":"I","p":1,"params":{"r":1,"lambda":0}}"#;
const IDENTITY: &str = r#"{"family":"I","p":1,"params":{"r":0,"lambda":0}}"#;

fn gft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gft")).args(args).env_remove("GFT_SEED").output().expect("gft runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn series(out: &Output) -> TruncatedSeries {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn apply_derivative_operator() {
    let out = gft(&["apply", "--op", I_1_1_0, "-i", r#"{"p":1,"coeffs":[1,1]}"#]);
    assert_eq!(code(&out), 0);
    assert_eq!(series(&out), TruncatedSeries::from_real(1, &[1.0, 2.0]).unwrap());
}

#[test]
fn identity_operator_keeps_coefficients_exactly() {
    let input = r#"{"p":1,"N":3,"coeffs":[[1.0,0.0],[0.1,-0.30000000000000004],[1e-17,2.5]]}"#;
    let out = gft(&["apply", "--op", IDENTITY, "-i", input]);
    assert_eq!(stdout(&out).trim(), input);
}

#[test]
fn apply_output_round_trips_exactly() {
    let f = gft_core::verify::random_function(2, 40, 0.3, 3).unwrap();
    let op = r#"{"family":"T","p":2,"params":{"r":-2,"lambda":[0.3,0.1],"kappa":1.5}}"#;
    let out = gft(&["apply", "--op", op, "-i", &serde_json::to_string(&f).unwrap()]);
    let expected = serde_json::from_str::<MultiplierOperator>(op).unwrap().apply(&f).unwrap();
    assert_eq!(series(&out), expected);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = gft(&["apply", "--op", I_1_1_0, "-i", r#"{"p":1,"coeffs":[1,"#]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid series"));
    assert_eq!(code(&gft(&["apply", "--op", I_1_1_0, "-i", "/no/such/file.json"])), 2);
    assert_eq!(code(&gft(&["verify", "identities", "--order", "4"])), 2);
    assert_eq!(code(&gft(&["verify", "nope"])), 2);
}

#[test]
fn class_checks_and_exit_codes() {
    let z = r#"{"p":1,"coeffs":[1]}"#;
    assert_eq!(code(&gft(&["check-class", "-i", z, "--class", "S*"])), 0);
    assert_eq!(code(&gft(&["check-class", "-i", z, "--class", "SL:0.5"])), 0);
    let koebe: Vec<String> = (1..=256).map(|n| n.to_string()).collect();
    let koebe = format!(r#"{{"p":1,"coeffs":[{}]}}"#, koebe.join(","));
    let out = gft(&["check-class", "-i", &koebe, "--class", "S*:0"]);
    assert_eq!(code(&out), 0);
    let verdict: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(verdict["worst"]["margin"].as_f64().unwrap() > 0.02);
    assert_eq!(code(&gft(&["check-class", "-i", &koebe, "--class", "S*:0.6"])), 1);
    // z - 2z^2 vanishes at z = 1/2, which is a grid point.
    assert_eq!(code(&gft(&["check-class", "-i", r#"{"p":1,"coeffs":[1,-2]}"#, "--class", "S*"])), 3);
}

#[test]
fn omega_phi_psi_chi_produce_unit_normalized_series() {
    let f = r#"{"p":1,"coeffs":[1,0.1,0.01]}"#;
    for args in [
        vec!["omega", "--op", I_1_1_0, "-i", f, "--mu", "1", "--nu", "1"],
        vec!["phi", "--op", I_1_1_0, "-i", f, "--mu", "1", "--nu", "-0.5"],
        vec!["psi", "--op", I_1_1_0, "-i", f, "--mu", "2", "--nu", "1"],
    ] {
        let out = gft(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert_eq!(series(&out).base_power(), 0);
    }
    let out = gft(&["chi", "--op", IDENTITY, "--dominant", "janowski:0.5,-0.5", "--mu", "1", "--nu", "1", "--theorem", "2", "--order", "16"]);
    let chi = series(&out);
    assert_eq!(chi.order(), 16);
    // Theorem 2 form with alpha = 1 for both indices: chi(0) = mu - nu = 0.
    assert_eq!(chi.coeff(0).norm(), 0.0);
    let out = gft(&["bernardi", "-i", r#"{"p":1,"coeffs":[1,1]}"#, "--alpha", "1"]);
    assert_eq!(series(&out), TruncatedSeries::from_real(1, &[1.0, 0.5]).unwrap());
}

#[test]
fn subordinate_reports_verdicts() {
    let q = r#"{"p":0,"coeffs":[1,0.5]}"#;
    assert_eq!(code(&gft(&["subordinate", "-i", q, "--region", "half-plane:0"])), 0);
    assert_eq!(code(&gft(&["subordinate", "-i", q, "--region", "half-plane:0.6"])), 1);
    assert_eq!(code(&gft(&["subordinate", "-i", q, "--region", "blob:1"])), 2);
}

fn csv_rows(out: &Output) -> Vec<[f64; 3]> {
    let text = stdout(out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,u,v"));
    lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect()
}

#[test]
fn boundary_curves() {
    let rows = csv_rows(&gft(&["boundary", "--region", "parabola:0.33333333333333337,1", "--points", "361"]));
    let vertex = rows.iter().find(|r| r[0] == 0.0).unwrap();
    assert!(vertex[1].abs() < 1e-15 && vertex[2] == 0.0);

    let rows = csv_rows(&gft(&["boundary", "--region", "lemniscate:0.5", "--points", "360"]));
    assert_eq!(rows.len(), 360);
    for [_, u, v] in rows {
        let w = gft_core::Complex64::new(u, v);
        assert!(((w * w - 1.0).norm() - 1.0).abs() <= 1e-10);
    }

    let rows = csv_rows(&gft(&["boundary", "--region", "half-plane:0.5", "--points", "11"]));
    assert!(rows.iter().all(|r| r[1] == 0.5));

    assert_eq!(code(&gft(&["boundary", "--region", "sector:3"])), 2);
    let json = gft(&["boundary", "--region", "disk:0,0,1", "--points", "4", "--format", "json"]);
    let points: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(points.as_array().unwrap().len(), 4);
}

#[test]
fn seed_comes_from_flag_or_environment() {
    let base = ["verify", "u1", "--trials", "4", "--radii", "0.5,0.9", "--angles", "32"];
    let seven = gft(&base);
    let env_eight = Command::new(env!("CARGO_BIN_EXE_gft")).args(base).env("GFT_SEED", "8").output().unwrap();
    let flag_eight = gft(&[&base[..], &["--seed", "8"]].concat());
    assert_eq!(code(&seven), 0);
    assert_ne!(seven.stdout, env_eight.stdout);
    assert_eq!(env_eight.stdout, flag_eight.stdout);
}

#[test]
fn constants_table_and_report() {
    let out = gft(&["constants"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("k_min ") && l.contains("1.224744871391589")));
    let out = gft(&["verify", "constants", "--pretty"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["details"][0]["computed"], 1.22474);
}

#[test]
fn identity_suite_with_given_operators() {
    let out = gft(&["verify", "identities", "--trials", "5", "--op", I_1_1_0, "--op", IDENTITY]);
    assert_eq!(code(&out), 0);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(reports.iter().any(|r| r["id"] == "theorem5-shift:I#1"));
}
