//! End-to-end checks of the command-line interface: determinism of report
//! bytes, grid-file ingestion, config handling, and validation diagnostics.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_harmonic-splines"))
}

fn run_ok(args: &[&str], dir: &Path) -> Output {
    let out = bin().args(args).current_dir(dir).output().unwrap();
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

#[test]
fn converge_report_is_byte_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let args = [
        "converge",
        "--field",
        "quadratic",
        "--p",
        "2",
        "--n",
        "100",
        "--n",
        "400",
        "--max-mode",
        "48",
        "--output-dir",
        "out",
    ];
    let first = run_ok(&args, tmp.path());
    let csv1 = fs::read(tmp.path().join("out/converge.csv")).unwrap();
    let prov1 = fs::read(tmp.path().join("out/converge_provenance.json")).unwrap();
    let second = run_ok(&args, tmp.path());
    let csv2 = fs::read(tmp.path().join("out/converge.csv")).unwrap();
    let prov2 = fs::read(tmp.path().join("out/converge_provenance.json")).unwrap();
    assert_eq!(csv1, csv2, "report bytes changed between identical runs");
    assert_eq!(prov1, prov2);
    assert_eq!(first.stdout, second.stdout);
    // the ratio column sits at 1 for a constant-Laplacian field
    let text = String::from_utf8(csv1).unwrap();
    let last = text.lines().last().unwrap();
    let ratio: f64 = last.rsplit(',').next().unwrap().parse().unwrap();
    assert!((ratio - 1.0).abs() < 1e-3, "ratio {ratio}");
}

#[test]
fn harmonic_field_reports_the_exact_sentinel() {
    let tmp = tempfile::tempdir().unwrap();
    run_ok(
        &[
            "converge",
            "--field",
            "harmonic",
            "--p",
            "2",
            "--n",
            "64",
            "--max-mode",
            "48",
            "--output-dir",
            "out",
        ],
        tmp.path(),
    );
    let text = fs::read_to_string(tmp.path().join("out/converge.csv")).unwrap();
    let last = text.lines().last().unwrap();
    assert!(last.ends_with(",exact"), "row: {last}");
    let error: f64 = last.split(',').nth(6).unwrap().parse().unwrap();
    assert!(error <= 1e-8, "harmonic field error {error}");
}

#[test]
fn config_file_with_flag_override() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(
        tmp.path().join("exp.toml"),
        "field = \"quadratic\"\np_list = [2.0]\nn_list = [100]\nmax_mode = 48\noutput_dir = \"out\"\n",
    )
    .unwrap();
    run_ok(
        &[
            "converge", "--config", "exp.toml", "--n", "64", "--n", "256",
        ],
        tmp.path(),
    );
    let text = fs::read_to_string(tmp.path().join("out/converge.csv")).unwrap();
    // the override replaces the file's n_list entirely
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains(",64,"));
    assert!(text.contains(",256,"));
}

#[test]
fn compare_pairs_adaptive_and_uniform_rows() {
    let tmp = tempfile::tempdir().unwrap();
    run_ok(
        &[
            "compare",
            "--field",
            "quadratic",
            "--auto-m",
            "--p",
            "2",
            "--n",
            "100",
            "--max-mode",
            "48",
            "--output-dir",
            "out",
        ],
        tmp.path(),
    );
    let text = fs::read_to_string(tmp.path().join("out/compare.csv")).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("adaptive,"));
    assert!(rows[1].starts_with("uniform,"));
    // constant Laplacian with the modulus rule: m = 1, the adaptive build
    // degenerates to the uniform grid and both errors agree
    let err = |row: &str| -> f64 { row.split(',').nth(6).unwrap().parse().unwrap() };
    let (a, u) = (err(rows[0]), err(rows[1]));
    assert!((a - u).abs() / u < 1e-6, "adaptive {a}, uniform {u}");
}

#[test]
fn grid_ingestion_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    // dump a fitted spline to a lattice, then run the sweep on the lattice
    run_ok(
        &[
            "dump-spline",
            "--field",
            "quadratic",
            "--budget",
            "16",
            "--resolution",
            "33",
            "--max-mode",
            "48",
            "--out",
            "grid.txt",
        ],
        tmp.path(),
    );
    let out = run_ok(
        &[
            "converge",
            "--grid",
            "grid.txt",
            "--p",
            "2",
            "--n",
            "25",
            "--max-mode",
            "48",
            "--output-dir",
            "out",
        ],
        tmp.path(),
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    // the ingested surface is quadratic away from the original cell edges, so
    // the measured error stays within a factor of the analytic one
    let n_error: f64 = last.split(',').nth(7).unwrap().parse().unwrap();
    assert!(n_error > 0.0 && n_error < 1.0, "n_error {n_error}");
}

#[test]
fn validation_failures_exit_nonzero_with_diagnostics() {
    let tmp = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &[
            "converge",
            "--field",
            "quadratic",
            "--n",
            "400",
            "--n",
            "100",
        ],
        &[
            "converge",
            "--field",
            "quadratic",
            "--p",
            "0.5",
            "--n",
            "100",
        ],
        &[
            "converge",
            "--field",
            "quadratic",
            "--gamma",
            "0.7",
            "--n",
            "100",
        ],
        &["converge", "--field", "no-such-field", "--n", "100"],
        &["compare", "--field", "quadratic", "--n", "99"],
        &["converge", "--n", "100"],
    ];
    for args in cases {
        let out = bin().args(*args).current_dir(tmp.path()).output().unwrap();
        assert!(!out.status.success(), "{args:?} should fail");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert!(stderr.starts_with("error: "), "{args:?}: {stderr}");
    }
}

#[test]
fn worker_count_env_is_validated() {
    let tmp = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["constants", "--p", "2"])
        .env("HARMONIC_SPLINES_WORKERS", "zero")
        .current_dir(tmp.path())
        .output()
        .unwrap();
    assert!(!out.status.success());
    let ok = bin()
        .args(["constants", "--p", "2"])
        .env("HARMONIC_SPLINES_WORKERS", "2")
        .current_dir(tmp.path())
        .output()
        .unwrap();
    assert!(ok.status.success());
}
