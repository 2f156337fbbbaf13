use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out: Output = Command::new(env!("CARGO_BIN_EXE_torsion3")).args(args).output().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torsion3-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn worked_inputs_exit_codes() {
    for (poly, code, label) in [
        ("x^2*(x^2+3)", 0, "C2"),
        ("(x^2-2)*(x^2+6)", 3, "C2xC2"),
        ("(x^2+2)*(x^2-6)", 0, "C2xC2"),
        ("x*(x^3+2)", 0, "S3"),
        ("x^4+x^2-3", 3, "D4"),
        ("x^4+2*x^2-12", 0, "D4"),
    ] {
        let (c, v, err) = run(&["solve", "--poly", poly, "--count", "2"]);
        assert_eq!(c, code, "{poly}: {err}");
        assert_eq!(v["status"]["code"], code);
        assert_eq!(v["case"]["label"], label);
        if code == 0 {
            assert_eq!(v["records"].as_array().unwrap().len(), 2);
        } else {
            assert!(err.contains("obstructed"), "{err}");
        }
    }
}

#[test]
fn bad_input_reports_position() {
    let (c, v, _) = run(&["classify", "--poly", "x^4+2x"]);
    assert_eq!(c, 1);
    assert!(v["status"]["error"].as_str().unwrap().contains("position"));
    let (c, _, _) = run(&["classify", "--poly", "x^4-2"]);
    assert_eq!(c, 1);
}

#[test]
fn saved_report_verifies_and_tampering_is_caught() {
    let path = scratch("s3.json");
    let p = path.to_str().unwrap();
    let (c, _, err) = run(&["solve", "--coeffs", "1,0,0,2,0", "--count", "3", "--json", p]);
    assert_eq!(c, 0, "{err}");
    let (c, v, err) = run(&["verify", "--poly", "x*(x^3+2)", "--report", p]);
    assert_eq!(c, 0, "{err}");
    assert_eq!(v["result"]["all_verified"], true);
    assert_eq!(v["result"]["records"].as_array().unwrap().len(), 3);

    // a different curve in the first record
    let mut saved: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    saved["records"][0]["curve"]["B"] = Value::String("7".into());
    std::fs::write(&path, saved.to_string()).unwrap();
    let (c, _, _) = run(&["verify", "--poly", "x*(x^3+2)", "--report", p]);
    assert_ne!(c, 0);

    // the records belong to a different quartic
    let (c, _, _) = run(&["solve", "--poly", "x*(x^3+2)", "--count", "2", "--json", p]);
    assert_eq!(c, 0);
    let (c, _, _) = run(&["verify", "--poly", "x^2*(x^2+3)", "--report", p]);
    assert_ne!(c, 0);
}

#[test]
fn other_subcommands() {
    let (c, v, _) = run(&["classify-j", "--j", "432"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["row"], "S3");
    let (c, v, _) = run(&["group-table"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 5);
    let (c, v, _) = run(&["qexp-check", "--terms", "12"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["identity_holds"], true);
    let (c, v, _) = run(&["obstruction", "--poly", "x^4+x^2-3"]);
    assert_eq!(c, 0);
    assert_eq!(v["obstruction"]["global_symbol"], "-1");
    let (c, _, _) = run(&["family", "--case", "S4", "--t", "0"]);
    assert_eq!(c, 1);
}

#[test]
fn output_is_deterministic() {
    let a = Command::new(env!("CARGO_BIN_EXE_torsion3")).args(["solve", "--poly", "x^4+2*x^2-12"]).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_torsion3")).args(["solve", "--poly", "x^4+2*x^2-12"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}
