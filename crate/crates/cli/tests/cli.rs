use std::fs;
use std::path::Path;

use assert_cmd::Command;
use predicates::prelude::*;
use tempfile::TempDir;

fn bchroma() -> Command {
    let mut cmd = Command::cargo_bin("bchroma").unwrap();
    cmd.env_remove("BCHROMA_WORKERS");
    cmd
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    bchroma()
        .arg("gen")
        .args(args)
        .arg("-o")
        .arg(&path)
        .assert()
        .success();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_rasta_writes_edges_and_arcs() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("r.el");
    bchroma()
        .args(["gen", "rasta", "4", "3", "2", "-o"])
        .arg(&out)
        .assert()
        .success()
        .stdout("9 vertices, 18 edges, 18 arcs\n");
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some("9 18"));
    let arcs = fs::read_to_string(dir.path().join("r.el.arcs")).unwrap();
    assert_eq!(arcs.lines().next(), Some("9 18"));
}

#[test]
fn gen_jaco_underlying_graph() {
    let dir = TempDir::new().unwrap();
    let path = gen(dir.path(), "j.el", &["jaco", "5", "1", "0"]);
    assert_eq!(
        fs::read_to_string(path).unwrap(),
        "5 5\n1 2\n2 3\n3 4\n3 5\n4 5\n"
    );
}

#[test]
fn gen_to_stdout() {
    bchroma()
        .args(["gen", "path", "3"])
        .assert()
        .success()
        .stdout("3 2\n1 2\n2 3\n");
}

#[test]
fn gen_rejects_bad_params() {
    bchroma()
        .args(["gen", "setgraph", "6"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("cap"));
    bchroma().args(["gen", "jaco", "5"]).assert().code(2);
    bchroma()
        .args(["gen", "dodecahedron", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown family"));
}

#[test]
fn gen_rejects_missing_output_directory() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("missing").join("k.el");
    bchroma()
        .args(["gen", "complete", "3", "-o"])
        .arg(&out)
        .assert()
        .code(2);
}

#[test]
fn gen_chithra_wheel() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(dir.path(), "c4.el", &["cycle", "4"]);
    let w = dir.path().join("w.el");
    bchroma()
        .args(["gen", "chithra", "--input", &c4, "--w", "1,2,3,4", "-o"])
        .arg(&w)
        .assert()
        .success()
        .stdout("5 vertices, 8 edges\n");
    bchroma()
        .arg("phi")
        .arg(&w)
        .assert()
        .success()
        .stdout(predicate::str::starts_with("phi 3\n"));
}

#[test]
fn gen_chithra_needs_cover_unless_partial() {
    let dir = TempDir::new().unwrap();
    let k3 = gen(dir.path(), "k3.el", &["complete", "3"]);
    bchroma()
        .args(["gen", "chithra", "--input", &k3, "--w", "1"])
        .assert()
        .code(2);
    bchroma()
        .args(["gen", "chithra", "--partial", "--input", &k3, "--w", "1"])
        .assert()
        .success();
}

#[test]
fn gen_edge_set_and_edge_joint() {
    let dir = TempDir::new().unwrap();
    let star = gen(dir.path(), "s.el", &["complete-bipartite", "1", "3"]);
    bchroma()
        .args(["gen", "edgesetgraph", "--input", &star])
        .assert()
        .success()
        .stderr("7 vertices, 21 edges\n");
    let k3 = gen(dir.path(), "k3.el", &["complete", "3"]);
    bchroma()
        .args([
            "gen",
            "edgejoint",
            "--input",
            &k3,
            "--input",
            &k3,
            "--v",
            "1",
            "--u",
            "1",
        ])
        .assert()
        .success()
        .stderr("6 vertices, 7 edges\n");
}

#[test]
fn phi_complete_with_oracle() {
    let dir = TempDir::new().unwrap();
    let k5 = gen(dir.path(), "k5.el", &["complete", "5"]);
    bchroma()
        .args(["phi", &k5, "--oracle"])
        .assert()
        .success()
        .stdout(
            predicate::str::starts_with("phi 5\n").and(predicate::str::contains("oracle 5 agrees")),
        );
}

#[test]
fn phi_spectrum_and_witness() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(dir.path(), "c4.el", &["cycle", "4"]);
    let witness = dir.path().join("w.json");
    bchroma()
        .args(["phi", &c4, "--spectrum", "--witness"])
        .arg(&witness)
        .assert()
        .success()
        .stdout(predicate::str::contains("spectrum {2}\n"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(json["phi"], 2);
    assert_eq!(json["k"], 2);
    bchroma()
        .arg("check")
        .arg(&c4)
        .arg(&witness)
        .assert()
        .success();
}

#[test]
fn phi_paths() {
    let dir = TempDir::new().unwrap();
    for (n, want) in [(3, 2), (4, 2), (5, 3)] {
        let p = gen(dir.path(), "p.el", &["path", &n.to_string()]);
        bchroma()
            .args(["phi", &p, "--oracle"])
            .assert()
            .success()
            .stdout(predicate::str::starts_with(format!("phi {want}\n")));
    }
}

#[test]
fn phi_pairwise_reading() {
    let dir = TempDir::new().unwrap();
    let p4 = gen(dir.path(), "p4.el", &["path", "4"]);
    bchroma()
        .args(["phi", &p4, "--reading", "pairwise", "--oracle"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("phi 3\n"));
}

#[test]
fn phi_timeout_exit_code() {
    let dir = TempDir::new().unwrap();
    let s5 = gen(dir.path(), "s5.el", &["setgraph", "5"]);
    bchroma()
        .args(["phi", &s5, "--budget", "10"])
        .assert()
        .code(20)
        .stderr(predicate::str::contains("undecided in"));
}

#[test]
fn phi_parse_error_names_line() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.el", "3 2\n1 2\n2 x\n");
    bchroma()
        .args(["phi", &bad])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("line 3"));
    bchroma()
        .args(["phi", "/nonexistent/g.el"])
        .assert()
        .code(2);
}

#[test]
fn check_reports() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(dir.path(), "c4.el", &["cycle", "4"]);
    let k3 = gen(dir.path(), "k3.el", &["complete", "3"]);
    let p3 = gen(dir.path(), "p3.el", &["path", "3"]);
    let good = write(dir.path(), "good.json", r#"{"k":2,"colors":[1,2,1,2]}"#);
    bchroma()
        .args(["check", &c4, &good])
        .assert()
        .success()
        .stdout(predicate::str::contains("b-coloring: yes"));
    let clash = write(dir.path(), "clash.json", r#"{"k":2,"colors":[1,1,2]}"#);
    bchroma()
        .args(["check", &k3, &clash])
        .assert()
        .code(3)
        .stdout(predicate::str::contains("proper: no (edge 1-2"));
    let three = write(dir.path(), "three.json", r#"{"k":3,"colors":[1,2,3]}"#);
    bchroma()
        .args(["check", &p3, &three])
        .assert()
        .code(3)
        .stdout(
            predicate::str::contains("b-coloring: no")
                .and(predicate::str::contains("class 1: no b-vertex")),
        );
    bchroma().args(["check", &k3, &good]).assert().code(2);
}

#[test]
fn verify_exit_codes() {
    bchroma()
        .args(["verify", "--claims", "PROP12-COMPLETE", "--max-n", "8"])
        .assert()
        .code(0);
    bchroma()
        .args(["verify", "--claims", "SETGRAPH", "--n", "2"])
        .assert()
        .code(10)
        .stdout(predicate::str::contains("REFUTED"));
    bchroma()
        .args(["verify", "--claims", "all", "--budget", "10"])
        .assert()
        .code(20);
    bchroma()
        .args(["verify", "--claims", "NOPE"])
        .assert()
        .code(2);
}

#[test]
fn verify_json_report() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("report.json");
    bchroma()
        .args(["verify", "--claims", "RASTA", "--json"])
        .arg(&json)
        .assert()
        .code(0);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 5);
    assert!(results
        .iter()
        .all(|r| r["status"] == "CONFIRMED" && r["solver"] == 2));
}

#[test]
fn verify_deterministic_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let json = dir.path().join(name);
        let out = bchroma()
            .args([
                "verify",
                "--claims",
                "JACO,CHITHRA,EDGEJOINT",
                "--deterministic",
                "--workers",
                "4",
                "--json",
            ])
            .arg(&json)
            .output()
            .unwrap();
        (out.stdout, fs::read(json).unwrap())
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn workers_from_environment() {
    bchroma()
        .env("BCHROMA_WORKERS", "2")
        .args(["verify", "--claims", "PROP12-PATH", "--max-n", "6"])
        .assert()
        .code(10);
}
