use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_connwidth"));
    c.env_remove("CONNWIDTH_GUARDS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

const P3: &str = r#"{"name":"P3","kind":"graph_cut","n":3,"vertices":3,"edges":[[0,1],[1,2]]}"#;
const K4: &str = r#"{"name":"K4","kind":"graph_cut","n":4,"vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;

#[test]
fn validate_exit_codes() {
    let d = TempDir::new().unwrap();
    let ok = write(&d, "p3.json", P3);
    let o = run(&["validate", s(&ok)]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["holds"], true);
    assert_eq!(v["lemma1"]["outcome"], "confirmed");

    let bad = write(
        &d,
        "bad.json",
        r#"{"name":"bad","kind":"explicit","n":2,"values":[0,1,1,1]}"#,
    );
    let o = run(&["validate", s(&bad)]);
    assert_eq!(code(&o), 1);
    let v = &json_lines(&o)[0];
    assert_eq!(v["definition"]["axiom"], "SYM");
    assert_eq!(v["definition"]["holds"], false);

    let short = write(
        &d,
        "short.json",
        r#"{"name":"x","kind":"explicit","n":2,"values":[0,1,1]}"#,
    );
    assert_eq!(code(&run(&["validate", s(&short)])), 2);

    let trunc = write(&d, "trunc.json", r#"{"name":"x","kind":"expl"#);
    let o = run(&["validate", s(&trunc)]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());

    assert_eq!(code(&run(&["validate", "/nonexistent/instance.json"])), 2);
}

#[test]
fn oversized_explicit_instance_is_refused() {
    let d = TempDir::new().unwrap();
    let big = write(&d, "big.json", r#"{"name":"big","kind":"explicit","n":30,"values":[]}"#);
    let o = run(&["validate", s(&big)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("explicit_max_n"));
}

#[test]
fn width_with_oracle() {
    let d = TempDir::new().unwrap();
    let k4 = write(&d, "k4.json", K4);
    let o = run(&["width", s(&k4), "--oracle"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["width"], 4);
    assert_eq!(v["ordering"].as_array().unwrap().len(), 4);
}

#[test]
fn check_family_reports_both_verdicts() {
    let d = TempDir::new().unwrap();
    let k4 = write(&d, "k4.json", K4);
    let fam = write(&d, "fam.json", r#"{"members":[0,1,2,4,8]}"#);
    let o = run(&["check-family", s(&k4), s(&fam), "--k", "3", "--ie"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["single_ideal"]["holds"], true);
    assert_eq!(v["linear_obstacle"]["holds"], true);

    let p3 = write(&d, "p3.json", P3);
    let oob = write(&d, "oob.json", r#"{"members":[8]}"#);
    assert_eq!(code(&run(&["check-family", s(&p3), s(&oob), "--k", "1"])), 2);
}

#[test]
fn duality_and_theorem1_exit_codes() {
    let d = TempDir::new().unwrap();
    let k4 = write(&d, "k4.json", K4);
    let o = run(&["duality", s(&k4), "--k", "3"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["outcome"], "confirmed");
    assert_eq!(v["lw"], 4);
    assert_eq!(v["exists_ideal"], true);

    let o = run(&["theorem1", s(&k4), "--k", "3", "--budget", "max_efficient=4"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json_lines(&o)[0]["outcome"], "budget_exceeded");

    let p3 = write(&d, "p3.json", P3);
    let o = run(&["theorem1", s(&p3), "--k", "0"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json_lines(&o)[0]["outcome"], "precondition_failed");

    let o = run(&["duality", s(&p3)]);
    assert_eq!(json_lines(&o).len(), 4);
}

#[test]
fn guards_from_environment_and_config() {
    let d = TempDir::new().unwrap();
    let k4 = write(&d, "k4.json", K4);
    let o = bin()
        .args(["theorem1", s(&k4), "--k", "3"])
        .env("CONNWIDTH_GUARDS", "max_efficient=4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);

    let cfg = write(&d, "guards.toml", "max_efficient = 4\n");
    assert_eq!(code(&run(&["--config", s(&cfg), "theorem1", s(&k4), "--k", "3"])), 3);

    let cfg = write(&d, "bad.toml", "no_such_guard = 4\n");
    assert_eq!(code(&run(&["--config", s(&cfg), "width", s(&k4)])), 2);
    assert_eq!(code(&run(&["width", s(&k4), "--budget", "dp_max_n=3"])), 2);
}

#[test]
fn enumerate_streams_one_family_per_line() {
    let d = TempDir::new().unwrap();
    let p3 = write(&d, "p3.json", P3);
    let o = run(&["enumerate", s(&p3), "--k", "1"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1 << 6);
    assert!(lines.iter().all(|v| v["members"].is_array()));
}

#[test]
fn out_writes_file_and_leaves_nothing_on_failure() {
    let d = TempDir::new().unwrap();
    let k4 = write(&d, "k4.json", K4);
    let out = d.path().join("width.json");
    let o = run(&["width", s(&k4), "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["width"], 4);

    let fail = d.path().join("fail.json");
    let o = run(&["width", s(&k4), "--budget", "dp_max_n=2", "--out", s(&fail)]);
    assert_eq!(code(&o), 2);
    assert!(!fail.exists());
    let leftovers = std::fs::read_dir(d.path()).unwrap().count();
    assert_eq!(leftovers, 2);
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    for dir in [&a, &b] {
        for (generator, kind) in [
            ("random", "graph-cut"),
            ("random", "graph-boundary"),
            ("cycle", "graph-cut"),
            ("star", "graph-boundary"),
        ] {
            let o = run(&[
                "gen",
                "--generator",
                generator,
                "--n",
                "5",
                "--seed",
                "7",
                "--count",
                "3",
                "--kind",
                kind,
                "--out",
                s(dir.path()),
            ]);
            assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        }
    }
    let mut names: Vec<_> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 12);
    for name in names {
        let x = std::fs::read(a.path().join(&name)).unwrap();
        let y = std::fs::read(b.path().join(&name)).unwrap();
        assert_eq!(x, y, "{name:?}");
        let o = run(&["validate", s(&a.path().join(&name))]);
        assert_eq!(code(&o), 0, "{name:?}");
    }
}

#[test]
fn gen_rejects_bad_arguments() {
    let d = TempDir::new().unwrap();
    let o = run(&[
        "gen",
        "--generator",
        "random",
        "--n",
        "4",
        "--p",
        "1.5",
        "--out",
        s(d.path()),
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(std::fs::read_dir(d.path()).unwrap().count(), 0);
    let o = run(&["gen", "--generator", "path", "--n", "4", "--out", "/nonexistent/dir"]);
    assert_eq!(code(&o), 2);
}
