//! End-to-end tests of the command surface, driving the built binary on the
//! shipped fixture files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../selfsim/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn validate_accepts_all_fixtures() {
    for name in [
        "flip.sgs",
        "rose2.sgs",
        "omega.sgs",
        "disc.sgs",
        "flat_cocycle.sgs",
        "persistent_cocycle.sgs",
        "single_loop.sgs",
    ] {
        let out = run(&["validate", fixture(name).to_str().unwrap()]);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).starts_with("ok:"), "{name}");
    }
}

#[test]
fn validate_rejects_broken_documents() {
    let dir = std::env::temp_dir();
    let bad_square = dir.join("selfsim-test-bad-square.sgs");
    std::fs::write(
        &bad_square,
        "RANK 2\nVERTICES\nv00 v10 v01 v11\nEDGES\nha 1 v00 v10\nhb 1 v01 v11\nua 2 v00 v01\nub 2 v10 v11\n",
    )
    .unwrap();
    let out = run(&["validate", bad_square.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("square-total"));

    let bad_cocycle = dir.join("selfsim-test-bad-cocycle.sgs");
    let doc = std::fs::read_to_string(fixture("flip.sgs"))
        .unwrap()
        .replace("1 a -> 1", "1 a -> 0");
    std::fs::write(&bad_cocycle, doc).unwrap();
    let out = run(&["validate", bad_cocycle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cocycle(a)"));

    let out = run(&["validate", "/nonexistent/selfsim.sgs"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_reports_the_goldens() {
    let out = run(&["analyze", fixture("rose2.sgs").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("simplicity: Simple"), "{}", stdout(&out));

    let out = run(&["analyze", fixture("disc.sgs").to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success(), "completed analyses exit 0 regardless of verdict");
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["schema"], "selfsim-report/1");
    assert_eq!(json["simplicity"]["status"], "NotSimple");

    let out = run(&["analyze", fixture("flip.sgs").to_str().unwrap(), "--format", "json", "--depth", "12"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["pseudo_free"]["status"], "Holds");
    assert_eq!(json["hausdorff"]["status"], "Holds");
    assert_eq!(json["g_cofinal"]["status"], "Holds");
    assert_eq!(json["simplicity"]["status"], "Unknown");
}

#[test]
fn analyze_output_is_deterministic() {
    let path = fixture("omega.sgs");
    let args = ["analyze", path.to_str().unwrap(), "--format", "json", "--depth", "2,2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mul_prints_canonical_products() {
    let out = run(&[
        "mul",
        fixture("flip.sgs").to_str().unwrap(),
        fixture("flip.elements").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "MUL u u = {(@v; e; @v)} [idempotent]",
            "MUL u ia = {(b; 1; a)}",
            "MUL t zero = 0 [idempotent]",
            "STAR t = {(b; 1; a)}",
        ]
    );
}

#[test]
fn boundary_lists_prefixes() {
    let out = run(&[
        "boundary",
        fixture("omega.sgs").to_str().unwrap(),
        "--vertex",
        "v00",
        "--depth",
        "1,1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.lines().filter(|l| l.contains("[complete boundary path]")).count(), 1);

    let out = run(&[
        "boundary",
        fixture("omega.sgs").to_str().unwrap(),
        "--vertex",
        "nope",
        "--depth",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
