use std::path::Path;
use std::process::Command;

fn knotforge(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_knotforge")).args(args).output().unwrap()
}

fn golden(case: &str, file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(case).join(file).display().to_string()
}

#[test]
fn json_and_text_formats() {
    let out = knotforge(&["scheme", "check", "--max-k", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 8);

    let out = knotforge(&["morse", "alexander", &golden("morse_alexander_anosov", "morse.json"), "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("alexander_text: t^2 - 3*t + 1"), "{text}");
}

#[test]
fn output_file_and_conventions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = knotforge(&[
        "theta",
        "reduce",
        "--p",
        "-1",
        "--q",
        "2",
        "--ihx-sign-convention",
        "B",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["conventions"]["ihx"], "B");
    assert_eq!(v["result"]["equals"], "Θ(0,1)");
}

#[test]
fn errors_exit_with_status_two() {
    let out = knotforge(&["morse", "zeta", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonexistent"));
    let out = knotforge(&["scheme", "check", "--max-k", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn golden_subcommand() {
    let suite = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let out = knotforge(&["golden", "--suite", suite.to_str().unwrap(), "--threads", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}
