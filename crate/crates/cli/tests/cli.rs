use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bousfield"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(path: PathBuf) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn model(dir: &Path, name: &str, extra: &[&str], file: &str) {
    let mut args = vec!["model", name, "--out", file];
    args.extend_from_slice(extra);
    let out = run(dir, &args);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn model_writes_files() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "toy-i", &[], "mi.json");
    let mi = json(dir.path().join("mi.json"));
    assert_eq!(mi["elements"].as_array().unwrap().len(), 4);
    assert_eq!(mi["field_elements"], serde_json::json!(["h"]));

    let out = run(dir.path(), &["model", "skeleton", "--k", "2"]);
    assert_eq!(code(&out), 0);
    let skel: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(skel["elements"].as_array().unwrap().len(), 47);
}

#[test]
fn model_rejects_bad_params() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["model", "boolean", "--k", "99"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("SIZE-CAP"));
    assert_eq!(code(&run(dir.path(), &["model", "nope"])), 2);
    assert_eq!(code(&run(dir.path(), &["model"])), 2);
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "toy-i", &[], "mi.json");
    model(dir.path(), "nilpotent-chain", &[], "n4.json");

    let out = run(dir.path(), &["check", "mi.json", "--json", "mi.report.json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out)
        .lines()
        .any(|l| l.starts_with("CONJ-R ") && l.contains("PASS")));
    let rep = json(dir.path().join("mi.report.json"));
    let conj = rep["property_results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["id"] == "CONJ-R")
        .unwrap();
    assert_eq!(conj["status"], "PASS");
    assert_eq!(conj["tier"], "FIELD(h)");

    let out = run(dir.path(), &["check", "n4.json", "--properties", "SQ-STAB"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("SQ-STAB") && stdout(&out).contains("FAIL [b]"));

    let out = run(dir.path(), &["check", "mi.json", "--properties", "NOPE"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("UNKNOWN-PROPERTY"));
}

#[test]
fn check_rejects_broken_models() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "toy-i", &[], "mi.json");
    let text = fs::read_to_string(dir.path().join("mi.json")).unwrap();
    // make smash(i, 1) = 0 while smash(1, i) stays i
    let broken = text.replacen(r#"["0", "0", "0", "i"]"#, r#"["0", "0", "0", "0"]"#, 1);
    assert_ne!(broken, text);
    fs::write(dir.path().join("broken.json"), broken).unwrap();
    let out = run(dir.path(), &["check", "broken.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("COMM"), "{}", stderr(&out));

    fs::write(dir.path().join("garbage.json"), "{ not json").unwrap();
    assert_eq!(code(&run(dir.path(), &["check", "garbage.json"])), 2);
    assert_eq!(code(&run(dir.path(), &["check", "missing.json"])), 2);
}

fn dot_nodes(path: PathBuf) -> usize {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| l.contains("[label="))
        .count()
}

fn dot_edges(path: PathBuf) -> usize {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| l.contains("->"))
        .count()
}

#[test]
fn derive_reports_and_dot() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "toy-i", &[], "mi.json");
    let out = run(
        dir.path(),
        &["derive", "mi.json", "--out", "mi.report.json", "--dot", "dots"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rep = json(dir.path().join("mi.report.json"));
    assert_eq!(rep["derived"]["dl"], serde_json::json!(["0", "h", "1"]));
    assert_eq!(rep["derived"]["cba"]["elements"], serde_json::json!(["0", "1"]));
    for view in ["hasse", "dl", "cba"] {
        let text = fs::read_to_string(dir.path().join("dots").join(format!("{view}.dot"))).unwrap();
        assert!(text.starts_with("digraph ") && text.ends_with("}\n"));
    }
    assert_eq!(dot_nodes(dir.path().join("dots/hasse.dot")), 4);
    assert_eq!(dot_nodes(dir.path().join("dots/dl.dot")), 3);
    assert_eq!(dot_nodes(dir.path().join("dots/cba.dot")), 2);
}

#[test]
fn derive_boolean_cba_matches_hasse() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "boolean", &["--k", "2"], "b2.json");
    assert_eq!(
        code(&run(
            dir.path(),
            &["derive", "b2.json", "--out", "r.json", "--dot", "d"]
        )),
        0
    );
    let hasse = fs::read_to_string(dir.path().join("d/hasse.dot")).unwrap();
    let cba = fs::read_to_string(dir.path().join("d/cba.dot")).unwrap();
    // same nodes and edges; only the graph name differs
    assert_eq!(
        hasse.lines().skip(1).collect::<Vec<_>>(),
        cba.lines().skip(1).collect::<Vec<_>>()
    );
}

#[test]
fn derive_skeleton_cba_view() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "skeleton", &["--k", "2"], "sk.json");
    assert_eq!(
        code(&run(
            dir.path(),
            &["derive", "sk.json", "--out", "r.json", "--dot", "d"]
        )),
        0
    );
    assert_eq!(dot_nodes(dir.path().join("d/cba.dot")), 32);
    assert_eq!(dot_edges(dir.path().join("d/cba.dot")), 80);
    assert_eq!(dot_nodes(dir.path().join("d/hasse.dot")), 47);
}

#[test]
fn derive_rejects_invalid_model() {
    let dir = TempDir::new().unwrap();
    fs::write(
        dir.path().join("bad.json"),
        r#"{"name": "x", "elements": ["0"], "leq": [], "smash": []}"#,
    )
    .unwrap();
    assert_eq!(code(&run(dir.path(), &["derive", "bad.json", "--out", "r.json"])), 2);
    assert!(!dir.path().join("r.json").exists());
}

#[test]
fn search_finds_n4() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &[
            "search",
            "--lattices",
            "size=4",
            "--property",
            "SQ-STAB",
            "--exhaustive",
            "--out",
            "f.json",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("quantales"));
    let f = json(dir.path().join("f.json"));
    let n4 = [
        ["0", "0", "0", "0"],
        ["0", "0", "0", "a"],
        ["0", "0", "a", "b"],
        ["0", "a", "b", "1"],
    ];
    let hit = f["findings"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["status"] == "FAIL")
        .unwrap();
    assert_eq!(hit["model"]["smash"], serde_json::json!(n4));
    assert_eq!(hit["witness"], serde_json::json!(["b"]));
    assert!(f["statistics"]["candidates_visited"].as_u64().unwrap() > 0);
    assert!(f.get("elapsed").is_none());
}

#[test]
fn search_three_chain_quantales() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &[
            "search",
            "--lattices",
            "size=3",
            "--property",
            "AX-QUANTALE",
            "--exhaustive",
            "--out",
            "f.json",
        ],
    );
    assert_eq!(code(&out), 0);
    let f = json(dir.path().join("f.json"));
    assert_eq!(f["findings"].as_array().unwrap().len(), 2);
    assert_eq!(f["statistics"]["quantales"], 2);
}

#[test]
fn seeded_search_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let args = |out: &'static str, jobs: &'static str| {
        vec![
            "search",
            "--lattices",
            "size=2..6",
            "--property",
            "CONJ-R",
            "--samples",
            "60",
            "--seed",
            "7",
            "--jobs",
            jobs,
            "--out",
            out,
        ]
    };
    assert_eq!(code(&run(dir.path(), &args("a.json", "1"))), 0);
    assert_eq!(code(&run(dir.path(), &args("b.json", "1"))), 0);
    assert_eq!(code(&run(dir.path(), &args("c.json", "4"))), 0);
    let a = fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.json")).unwrap());
    assert_eq!(a, fs::read(dir.path().join("c.json")).unwrap());
}

#[test]
fn search_over_model_files() {
    let dir = TempDir::new().unwrap();
    model(dir.path(), "toy-i", &[], "mi.json");
    model(dir.path(), "nilpotent-chain", &[], "n4.json");
    let out = run(
        dir.path(),
        &[
            "search",
            "--lattices",
            "mi.json",
            "n4.json",
            "--property",
            "SQ-STAB",
            "--exhaustive",
            "--out",
            "f.json",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let f = json(dir.path().join("f.json"));
    let statuses: Vec<&str> = f["findings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["status"].as_str().unwrap())
        .collect();
    assert_eq!(statuses, ["PASS", "FAIL"]);
}

#[test]
fn search_rejects_bad_tasks() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &[
            "search",
            "--lattices",
            "size=3",
            "--property",
            "NOPE",
            "--exhaustive",
            "--out",
            "f.json",
        ],
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("UNKNOWN-PROPERTY") && stderr(&out).contains("SQ-STAB"));
    for lattices in ["size=x", "size=9", "size=5..3", "size=0"] {
        let out = run(
            dir.path(),
            &[
                "search",
                "--lattices",
                lattices,
                "--property",
                "SQ-STAB",
                "--exhaustive",
                "--out",
                "f.json",
            ],
        );
        assert_eq!(code(&out), 2, "{lattices}");
    }
    let out = run(
        dir.path(),
        &[
            "search",
            "--lattices",
            "size=6",
            "--property",
            "CONJ-R",
            "--exhaustive",
            "--out",
            "f.json",
        ],
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("SIZE-CAP"));
    let out = run(
        dir.path(),
        &[
            "search",
            "--lattices",
            "size=3",
            "--property",
            "SQ-STAB",
            "--out",
            "f.json",
        ],
    );
    assert_eq!(code(&out), 2);
    assert!(!dir.path().join("f.json").exists());
}
