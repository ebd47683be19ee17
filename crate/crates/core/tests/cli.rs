use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperbolical"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn constants_reports_residuals_and_failed_root() {
    let o = run(&["constants"]);
    let out = stdout(&o);
    assert!(out.contains("gamma           = 0.4990429999"), "{out}");
    assert!(out.contains("c0              = 0.0823058167837972"), "{out}");
    assert!(out.contains("residual_second = -5.06"), "{out}");
    assert!(out.contains("solve failed"), "{out}");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn solve_both_modes() {
    let o = run(&["solve", "--state", "2p", "--alpha", "0.1", "--sigma0", "0.1", "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("2p analytic E = 2.61886 numeric E = 2.61888 rel err = "), "{out}");
}

#[test]
fn solve_s_wave_analytic() {
    let o = run(&["solve", "--state", "3s", "--D", "10", "--alpha", "0.1", "--sigma0", "0.1", "--mode", "analytic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3s analytic E = "));
}

#[test]
fn solve_tolerance_violation() {
    let o = run(&[
        "solve", "--state", "4f", "--alpha", "0.2", "--sigma0", "0.2", "--tolerance", "0.001",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds"));
}

#[test]
fn unbound_state_notice() {
    let o = run(&["solve", "--state", "2p", "--alpha", "0.1", "--sigma0", "1", "--mode", "analytic"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("notice: state n=0, l=1 is not bound"));
}

#[test]
fn absurd_bracket_is_reported_verbatim() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "energy_lo = 0.1\nenergy_hi = 0.2\n").unwrap();
    let o = run(&[
        "solve", "--state", "2p", "--alpha", "0.1", "--sigma0", "0.1", "--mode", "numeric", "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: bracket failure: "), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["solve", "--state", "1p", "--alpha", "0.1", "--sigma0", "0.1"][..],
        &["solve", "--state", "2x", "--alpha", "0.1", "--sigma0", "0.1"],
        &["solve", "--state", "2p", "--alpha=-0.1", "--sigma0", "0.1"],
        &["solve", "--state", "2p", "--alpha", "0.1", "--sigma0", "0.1", "--mode", "fast"],
        &["solve", "--alpha", "0.1"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bad_config_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "D = 10\nwhat = 1\n").unwrap();
    let o = run(&["table1", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("config line 2"));
}

#[test]
fn wavefunction_dump_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    for (label, nodes) in [("2p", 0), ("3p", 1)] {
        let csv = dir.path().join(format!("{label}.csv"));
        let o = run(&[
            "wavefunction", "--state", label, "--alpha", "0.1", "--sigma0", "0.1", "--out",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let text = std::fs::read_to_string(&csv).unwrap();
        assert!(text.starts_with("r,R\n"));
        assert!(!text.contains('\r'));
        let side: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(csv.with_extension("json")).unwrap()).unwrap();
        assert_eq!(side["node_count"], nodes);
        for key in ["E", "beta", "delta", "N_nl"] {
            assert!(side[key].is_f64(), "{key}");
        }
    }
}

#[test]
fn wavefunction_missing_directory() {
    let o = run(&[
        "wavefunction", "--state", "2p", "--alpha", "0.1", "--sigma0", "0.1", "--out", "/no/such/dir/w.csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: "));
}

fn table1(dir: &Path) -> Output {
    run(&["table1", "--out", dir.to_str().unwrap()])
}

#[test]
fn table1_is_deterministic_and_flags_violations() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let oa = table1(a.path());
    let ob = table1(b.path());
    assert_eq!(oa.status.code(), Some(1));
    assert_eq!(ob.status.code(), Some(1));
    assert!(stderr(&oa).contains("tolerance violations"));

    let csv_a = std::fs::read(a.path().join("table1.csv")).unwrap();
    let csv_b = std::fs::read(b.path().join("table1.csv")).unwrap();
    assert_eq!(csv_a, csv_b);

    let text = String::from_utf8(csv_a).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("state,alpha,sigma0,E_analytic,E_numeric,E_paper_present,E_paper_lucha,E_paper_dong,rel_err_percent")
    );
    assert_eq!(lines.clone().count(), 56);
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&first[..3], &["2p", "0.1", "0.1"]);
    assert_eq!(first[5], "2.61874");
    assert_eq!(first[6], "2.61935");

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(a.path().join("table1.json")).unwrap()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 56);
    assert!(json["summary"]["max_rel_err"].as_f64().unwrap() <= 0.2);
}

#[test]
fn loose_tolerance_still_fails_on_published_columns() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["table1", "--out", dir.path().to_str().unwrap(), "--tolerance", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("E_lucha"));
}
