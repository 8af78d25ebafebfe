use std::path::Path;
use std::process::{Command, Output};

fn p6bull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p6bull")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes_follow_status() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let k5_edges: String = (1..=5).flat_map(|u| (u + 1..=5).map(move |v| format!("e {u} {v}\n"))).collect();
    let k5 = write(dir.path(), "k5.col", &format!("p edge 5 10\n{k5_edges}"));
    let p6 = write(dir.path(), "p6.col", "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n");
    let bad = write(dir.path(), "bad.col", "p edge 2 1\ne 1 1\n");

    let o = p6bull(&["decide", &c5, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["coloring"].as_array().unwrap().len(), 5);

    assert_eq!(p6bull(&["decide", &k5]).status.code(), Some(1));
    assert_eq!(p6bull(&["decide", &p6, "--strict-class"]).status.code(), Some(2));
    let o = p6bull(&["decide", &p6, "--force", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["class_checked"], false);
    let o = p6bull(&["decide", &bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(p6bull(&["no-such-verb"]).status.code(), Some(3));
}

#[test]
fn verify_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let good = write(dir.path(), "good.txt", "v 1 1\nv 2 2\nv 3 1\nv 4 2\nv 5 3\n");
    let clash = write(dir.path(), "clash.txt", "v 1 1\nv 2 1\nv 3 2\nv 4 1\nv 5 2\n");
    assert_eq!(p6bull(&["verify", &c5, &good]).status.code(), Some(0));
    assert_eq!(p6bull(&["verify", &c5, &clash]).status.code(), Some(1));

    let o = p6bull(&["trace", &c5]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: four_colorable"));
}

#[test]
fn gen_feeds_decide_and_difftest_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gen");
    let o = p6bull(&["gen", "--n", "10", "--p", "0.4", "--seed", "5", "--count", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 3);
    for f in &files {
        let code = p6bull(&["decide", f.to_str().unwrap()]).status.code();
        assert!(matches!(code, Some(0 | 1)), "{f:?}");
    }

    let failures = dir.path().join("failures");
    let args = ["difftest", "--count", "25", "--nmin", "8", "--nmax", "11", "--seed", "9", "--failures"];
    let a = p6bull(&[&args[..], &[failures.to_str().unwrap()]].concat());
    let b = p6bull(&[&args[..], &[failures.to_str().unwrap()]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a).lines().count(), 25);
    assert_eq!(a.stdout, b.stdout);
    assert!(!failures.exists());
}
