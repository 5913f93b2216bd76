use std::path::Path;
use std::process::{Command, Output};

use quartic_squares::cli::{records_from_json, records_to_json};

fn run(args: &[&str], path: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quartic-squares"));
    cmd.args(args);
    if let Some(p) = path {
        cmd.arg(p);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> Option<i32> {
    out.status.code()
}

#[test]
fn mestre_command_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let ok = run(&["mestre", "--t", "3/4", "--out"], Some(&path));
    assert_eq!(code(&ok), Some(0));
    let records = records_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(records[0].points.len(), 6);

    let degenerate = run(&["mestre", "--t", "1/2", "--out"], Some(&path));
    assert_eq!(code(&degenerate), Some(2));
    assert!(String::from_utf8_lossy(&degenerate.stderr).contains("degenerate sequence"));
    assert_eq!(
        code(&run(&["mestre", "--t", "0", "--out"], Some(&path))),
        Some(2)
    );
    assert_eq!(code(&run(&["mestre", "--out"], Some(&path))), Some(2));
}

#[test]
fn symbolic_mestre_record_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    assert_eq!(
        code(&run(&["mestre", "--symbolic", "--out"], Some(&path))),
        Some(0)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let records = records_from_json(&text).unwrap();
    assert_eq!(records[0].t, "t");
    assert_eq!(code(&run(&["verify"], Some(&path))), Some(0));
}

#[test]
fn fixed_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    assert_eq!(
        code(&run(
            &["fixed", "--t", "3", "--count", "1", "--out"],
            Some(&path)
        )),
        Some(0)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let records = records_from_json(&text).unwrap();
    let xs: Vec<&str> = records[0].points.iter().map(|p| p[0].as_str()).collect();
    assert_eq!(xs, ["1", "4", "9", "16", "25", "36"]);
    // canonical serialization is a fixed point
    assert_eq!(records_to_json(&records), text);
    assert_eq!(code(&run(&["verify"], Some(&path))), Some(0));

    let mut corrupted = records.clone();
    corrupted[0].points[1][1] = {
        let y: quartic_squares::Rational = records[0].points[1][1].parse().unwrap();
        (&y + &quartic_squares::Rational::one()).to_string()
    };
    std::fs::write(&path, records_to_json(&corrupted)).unwrap();
    let failed = run(&["verify"], Some(&path));
    assert_eq!(code(&failed), Some(1));
    assert!(String::from_utf8_lossy(&failed.stdout).contains("record 0: FAILED"));

    corrupted[0].c = "1/0".into();
    std::fs::write(&path, records_to_json(&corrupted)).unwrap();
    assert_eq!(code(&run(&["verify"], Some(&path))), Some(2));
}

#[test]
fn fixed_rejects_degenerate_t() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    assert_eq!(
        code(&run(&["fixed", "--t", "-1", "--out"], Some(&path))),
        Some(2)
    );
    assert!(!path.exists());
}

#[test]
fn paper_check_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["paper-check", "--report"], Some(&path));
    assert_eq!(
        code(&out),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 12);
    assert_eq!(report["passed"], true);
    let status = |name: &str| {
        checks
            .iter()
            .find(|c| c["name"] == name)
            .map(|c| c["status"].as_str().unwrap().to_string())
    };
    assert_eq!(status("Q.x4.coeff").as_deref(), Some("MATCH"));
    let ptilde = status("Ptilde.x").unwrap();
    assert!(ptilde == "MATCH" || ptilde == "PARAM-MISMATCH", "{ptilde}");
    for c in checks {
        if c["kind"] == "hard" {
            assert_eq!(c["status"], "PASS", "{c}");
        }
    }
}
