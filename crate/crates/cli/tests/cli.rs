use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use switchlogic::model::{Mode, SwitchedLinearSystem};
use switchlogic::stp::{Matrix, NumericMode};
use switchlogic_cli::description::{parse, to_toml, Modes, Options};
use switchlogic_cli::{load, save, SystemDescription};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn switched() -> PathBuf {
    fixture("switched_example.toml")
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn cli(file: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_switchlogic"))
        .arg(file)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(file: &Path, args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json", "--no-timestamp"]);
    let out = cli(file, &full);
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), value)
}

const BASE: &str = "[system]\nq = 2\n[logic]\nk = 2\nstate_nodes = 2\ninput_nodes = 1\n";

#[test]
fn fixture_loads_with_expected_dimensions() {
    let d = load(&switched()).unwrap();
    let Modes::Rational(sls) = &d.modes else { panic!("expected rational modes") };
    assert_eq!((sls.n(), sls.m(), sls.p(), sls.q()), (3, 1, 1, 2));
    assert_eq!((d.network.n_states(), d.network.n_inputs()), (4, 2));
}

#[test]
fn short_l_is_a_dimension_error_naming_l() {
    let text = format!("{BASE}l = [1, 1, 2, 4, 4, 4, 3]\nr = [1, 1, 1, 1, 1, 1, 1, 1]\n");
    let err = parse(&text).unwrap_err().to_string();
    assert!(err.starts_with("L has 7 columns"), "{err}");
}

#[test]
fn signal_out_of_range_is_reported() {
    let text = format!("{BASE}l = [1, 1, 2, 4, 4, 4, 3, 3]\nr = [1, 2, 3, 1, 1, 1, 1, 1]\n");
    let err = parse(&text).unwrap_err().to_string();
    assert!(err.contains("R entry 3 at column 3"), "{err}");
}

#[test]
fn input_errors_exit_with_two() {
    let bad = tmp("bad_r.toml");
    std::fs::write(&bad, format!("{BASE}l = [1, 1, 2, 4, 4, 4, 3, 3]\nr = [3, 1, 1, 1, 1, 1, 1, 1]\n")).unwrap();
    let out = cli(&bad, &["attractors"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("R entry 3"));
    assert_eq!(cli(&tmp("missing.toml"), &["attractors"]).status.code(), Some(2));
    assert_eq!(cli(&switched(), &["analyze", "stability"]).status.code(), Some(2));
}

#[test]
fn analyze_all_on_the_fixture() {
    let (code, report) = json(&switched(), &["analyze", "all"]);
    assert_eq!(code, 0);
    let verdicts = report["findings"]["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 4);
    for v in verdicts {
        assert_eq!(v["holds"], true, "{v}");
        assert_eq!(v["checked_alphas"], serde_json::json!([4]));
    }
    assert_eq!(verdicts[0]["witness"], serde_json::json!([1, 2, 2]));
    assert_eq!(verdicts[1]["witness"], serde_json::json!([1, 2, 2]));
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let out = cli(&switched(), &["analyze", "reachability", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn oracle_agrees_on_the_fixture() {
    let (code, report) = json(&switched(), &["oracle", "kalman", "reachability", "--alphas", "4"]);
    assert_eq!(code, 0);
    let passing = &report["findings"]["verdicts"][0]["passing"];
    assert_eq!(passing, &serde_json::json!([[1, 2, 2], [2, 1, 1], [2, 1, 2], [2, 2, 1], [2, 2, 2]]));
}

#[test]
fn quantitative_set_reachability() {
    let file = fixture("set_reachability.toml");
    let args = |l: &'static str| ["setreach", "--l", l, "--omega0", "4,6", "--omegad", "5,7,8;1,2,3", "--quantitative"];
    let (code, report) = json(&file, &args("2"));
    assert_eq!(code, 0);
    assert_eq!(report["findings"]["matrix"], serde_json::json!([[4], [2]]));
    let (code, report) = json(&file, &args("1"));
    assert_eq!(code, 1);
    assert_eq!(report["findings"]["matrix"], serde_json::json!([[2], [0]]));
    assert_eq!(report["findings"]["verdicts"]["globally_reachable"], serde_json::json!([true, false]));
}

#[test]
fn untrackable_reference_exits_with_one() {
    let (code, report) = json(&switched(), &["track", "--theta0", "1", "--ref", "2,1,2"]);
    assert_eq!(code, 1);
    assert_eq!(report["outcome"], "negative");
    assert_eq!(report["findings"]["report"]["first_failure"], 2);

    let (code, report) = json(&switched(), &["track", "--theta0", "4", "--ref", "1,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(report["findings"]["report"]["witness"], serde_json::json!([2, 2, 2]));
}

#[test]
fn realization_commands() {
    let (code, report) = json(&switched(), &["realize", "fot", "--durations", "1,inf"]);
    assert_eq!(code, 1);
    let signals = report["findings"]["report"]["signals"].as_array().unwrap();
    assert_eq!(signals.len(), 2);
    let out = cli(&switched(), &["realize", "dwell", "--min", "2"]);
    assert_eq!(out.status.code(), Some(2), "one dwell time for two signals");
}

#[test]
fn graph_export_writes_dot() {
    let out_path = tmp("graph.dot");
    let (code, report) = json(&switched(), &["graph", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["findings"]["nodes"], 8);
    let dot = std::fs::read_to_string(&out_path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("s4 [label=\"1×(2,2)\"]"));
}

#[test]
fn reports_are_deterministic() {
    for format in ["text", "json"] {
        let args = ["analyze", "all", "--format", format, "--no-timestamp"];
        let first = cli(&switched(), &args);
        let second = cli(&switched(), &args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout);
    }
    let timed = cli(&switched(), &["attractors"]);
    assert!(String::from_utf8_lossy(&timed.stdout).contains("generated: unix"));
}

fn round_trip(d: &SystemDescription) {
    let text = to_toml(d).unwrap();
    assert_eq!(&parse(&text).unwrap(), d, "{text}");
}

#[test]
fn fixtures_round_trip() {
    for name in ["switched_example.toml", "set_reachability.toml"] {
        let d = load(&fixture(name)).unwrap();
        round_trip(&d);
        let path = tmp(name);
        save(&d, &path).unwrap();
        assert_eq!(load(&path).unwrap(), d);
    }
}

#[test]
fn rational_and_float_descriptions_round_trip() {
    let mut d = load(&switched()).unwrap();
    let Modes::Rational(sls) = d.modes.clone() else { panic!() };
    // Non-integer entries in both modes.
    let thirds: Vec<Mode<_>> = sls
        .modes()
        .iter()
        .map(|m| {
            let a = m.a.map(|v| v / switchlogic::stp::Rational::from_integer(3.into()));
            Mode::new(a, m.b.clone(), m.c.clone())
        })
        .collect();
    d.modes = Modes::Rational(SwitchedLinearSystem::new(thirds).unwrap());
    d.options.t_max = Some(4);
    round_trip(&d);

    let f = |rows: &[&[f64]]| Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    let float_modes = vec![
        Mode::new(f(&[&[0.1, -2.5], &[1.0 / 3.0, 1e-7]]), f(&[&[1.0], &[0.0]]), f(&[&[0.25, 4.0]])),
        Mode::new(f(&[&[-7.125, 0.0], &[2.0, 1.5]]), f(&[&[0.0], &[-1.0]]), f(&[&[1.0, 0.0]])),
    ];
    d.modes = Modes::Float(SwitchedLinearSystem::new(float_modes).unwrap());
    d.options = Options {
        numeric: Some(NumericMode::Float),
        tolerance: Some(1e-12),
        t_max: None,
    };
    round_trip(&d);
}
