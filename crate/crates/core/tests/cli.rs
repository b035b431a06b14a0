use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cfi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfi")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("cfi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn gen_examples() {
    let c = cfi(&["gen", "C", "5", "Ytilde"]);
    assert!(c.status.success());
    let v = json(&c);
    assert_eq!(v["n"], 30);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    assert_eq!(json(&cfi(&["gen", "K", "4", "Y"]))["n"], 40);
    let p = json(&cfi(&["gen", "P", "1", "base"]));
    assert_eq!(p, serde_json::json!({"n": 2, "edges": [[0, 1]]}));
    assert_eq!(json(&cfi(&["gen", "K", "3", "3", "base"]))["n"], 6);
    assert_eq!(json(&cfi(&["gen", "grid", "2", "3", "base"]))["n"], 6);
}

#[test]
fn pipeline_through_files() {
    let (y, yt, base) = (tmp("y.json"), tmp("yt.dimacs"), tmp("base.json"));
    assert!(cfi(&["gen", "K3,3", "Y", "--seed", "5", "--out", &y]).status.success());
    assert!(cfi(&["gen", "K3,3", "Ytilde", "--seed", "6", "--format", "dimacs", "--out", &yt]).status.success());
    assert!(cfi(&["gen", "K3,3", "base", "--out", &base]).status.success());
    assert!(Path::new(&yt).exists());

    assert_eq!(json(&cfi(&["distinguish", &y]))["verdict"], "original");
    let d = json(&cfi(&["distinguish", &yt]));
    assert_eq!(d["verdict"], "twisted");
    assert_eq!(d["base"]["n"], 6);

    let tw = json(&cfi(&["tw", &base]));
    assert_eq!(tw["width"], 3);

    let fo = cfi(&["focheck", &yt, "--base-file", &base]);
    assert!(fo.status.success());
    assert_eq!(json(&fo)["disagree"], 0);

    let eq = json(&cfi(&["equiv", "--logic", "Ck", "--k", "2", &y, &yt]));
    assert_eq!(eq["equivalent"], true);
    assert!(!eq["classes_per_round"].as_array().unwrap().is_empty());
}

#[test]
fn hom_reports_gap() {
    let base = tmp("c3.json");
    assert!(cfi(&["gen", "C", "3", "base", "--out", &base]).status.success());
    let v = json(&cfi(&["hom", "--base", &base]));
    assert_eq!(v, serde_json::json!({"hom_Y": 36, "hom_Ytilde": 0, "gap": 36}));
}

#[test]
fn exit_codes() {
    let bad = cfi(&["gen", "Q", "3", "Y"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(json(&bad)["error"].is_string());
    assert_eq!(cfi(&["nonsense"]).status.code(), Some(2));
    assert_eq!(cfi(&["distinguish", "/nonexistent/file"]).status.code(), Some(2));

    let ok = cfi(&["verify-suite", "--only", "1,2"]);
    assert_eq!(ok.status.code(), Some(0));
    let report = json(&ok);
    assert_eq!(report["passed"], true);
    let ids: Vec<_> = report["checks"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [1, 2]);

    let mutated = cfi(&["verify-suite", "--only", "6", "--extra-twist"]);
    assert_eq!(mutated.status.code(), Some(1));
    assert_eq!(json(&mutated)["passed"], false);
}
