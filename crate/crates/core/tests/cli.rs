use std::path::PathBuf;
use std::process::Command;

fn cmtilt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cmtilt"))
}

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

#[test]
fn analyze_writes_report_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = cmtilt().arg("analyze").arg(spec("e7.json")).arg("--out").arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["schema"], "cmtilt/1");
    assert_eq!(report["a_invariant"], 4);
    let dot = std::fs::read_to_string(dir.path().join("quiver.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    let again = tempfile::tempdir().unwrap();
    cmtilt().arg("analyze").arg(spec("e7.json")).arg("--out").arg(again.path()).output().unwrap();
    assert_eq!(
        std::fs::read(dir.path().join("report.json")).unwrap(),
        std::fs::read(again.path().join("report.json")).unwrap()
    );
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| cmtilt().args(args).output().unwrap().status.code();
    assert_eq!(code(&["verify", "ainfty"]), Some(0));
    assert_eq!(code(&["verify", "ainfty", "--corrupt"]), Some(1));
    assert_eq!(code(&["verify", "nonsense"]), Some(2));
    assert_eq!(code(&["analyze", "/nonexistent/spec.json"]), Some(2));
    let e7 = spec("e7.json");
    assert_eq!(code(&["analyze", e7.to_str().unwrap(), "--rs", "1,1", "--emit", "text"]), Some(2));
}

#[test]
fn semigroup_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = cmtilt().args(["semigroup", "3,5", "--emit", "csv,json", "--out"]).arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("semigroup.csv")).unwrap();
    assert_eq!(csv.lines().nth(1).unwrap().split(',').take(2).collect::<Vec<_>>(), ["3 5", "7"]);
}
