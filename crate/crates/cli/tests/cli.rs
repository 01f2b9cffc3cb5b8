use std::path::Path;
use std::process::{Command, Output};

use z4codes::named::named_code;
use z4codes::registry::fig1_code;

fn z4wb(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4wb"))
        .arg("--out")
        .arg(dir.join("store"))
        .args(args)
        .output()
        .expect("spawn z4wb")
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn verify_fig1_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = z4wb(dir.path(), &["verify", "fig1"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = json_lines(&out);
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r["verdict"] == "pass"));
}

#[test]
fn canon_and_double_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let g24 = named_code("g24").unwrap();
    let path = dir.path().join("g24.txt");
    std::fs::write(&path, g24.to_text()).unwrap();

    let out = z4wb(dir.path(), &["canon", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["payload"]["aut_order"], "244823040");

    let out = z4wb(dir.path(), &["double", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["payload"]["dim"], 13);
    assert_eq!(rec["payload"]["triply_even"], true);
}

#[test]
fn augment_rejects_bad_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.z4");
    std::fs::write(&path, fig1_code().to_text()).unwrap();
    let p = path.to_str().unwrap();

    let short = z4wb(dir.path(), &["augment", p, "1111"]);
    assert_eq!(short.status.code(), Some(1));

    // the all-ones word lies in the residue already
    let ones = "1".repeat(24);
    let inside = z4wb(dir.path(), &["augment", p, &ones]);
    assert_eq!(inside.status.code(), Some(1));
}

#[test]
fn report_without_store_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = z4wb(dir.path(), &["report"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_manifest_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let out = Command::new(env!("CARGO_BIN_EXE_z4wb"))
            .arg("--out")
            .arg(d)
            .arg("classify")
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let ma = std::fs::read(a.join("manifest.jsonl")).unwrap();
    let mb = std::fs::read(b.join("manifest.jsonl")).unwrap();
    assert!(!ma.is_empty());
    assert_eq!(ma, mb);
    assert_eq!(String::from_utf8_lossy(&ma).lines().count(), 179);

    let out = Command::new(env!("CARGO_BIN_EXE_z4wb"))
        .arg("--out")
        .arg(&a)
        .arg("report")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
