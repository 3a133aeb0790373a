#![cfg(feature = "cli")]

use std::process::{Command, Output};

fn gravent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gravent"))
        .args(args)
        .output()
        .expect("run gravent")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let svg = dir.path().join("out.svg");
    let o = gravent(&[
        "--preset",
        "setB",
        "--points",
        "9",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("model,mass_kg,coupling_natural,dphi_LR"));
    assert_eq!(lines.count(), 18);
    let plot = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(plot.matches("<polyline").count(), 2);
    let err = stderr(&o);
    assert!(err.contains("crossover m*"), "{err}");
    assert!(err.contains("threshold"), "{err}");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let ini = dir.path().join("run.ini");
    std::fs::write(&ini, "model = II\npoints = 4\nmass_min = 1e-30\n").unwrap();
    let o = gravent(&["--config", ini.to_str().unwrap(), "--points", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().skip(1).all(|l| l.starts_with("II,")));
}

#[test]
fn bad_config_line_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let ini = dir.path().join("bad.ini");
    std::fs::write(&ini, "points = 5\ntau = soon\n").unwrap();
    let o = gravent(&["--config", ini.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn invalid_flag_value_names_the_flag() {
    let o = gravent(&["--points", "1"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("--points"));
}

#[test]
fn audit_outputs() {
    let o = gravent(&["--print-units", "--units", "natural"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("mode=natural"));
    assert!(out.contains("magnetic_field_convention=heaviside-lorentz"));

    let o = gravent(&["--explain-signs"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("MATCH").count(), 1);
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = gravent(&[
        "--points",
        "25",
        "--kernel",
        "erf",
        "--sigma0",
        "1e-9",
        "--sigma0p",
        "2e-9",
    ]);
    let b = gravent(&[
        "--points",
        "25",
        "--kernel",
        "erf",
        "--sigma0",
        "1e-9",
        "--sigma0p",
        "2e-9",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
