use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(text: &str, args: &[&str]) -> Output {
    let mut file = std::env::temp_dir();
    file.push(format!(
        "segre-cli-{}-{}.seg",
        std::process::id(),
        args.join("_").replace(['/', ' '], "")
    ));
    std::fs::File::create(&file)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_segre"))
        .arg(&file)
        .args(args)
        .output()
        .unwrap();
    std::fs::remove_file(&file).ok();
    out
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const HAK1: &str = "ring t1 t2 t3\nideal F: t3*t1, t3*t2, t3^2\npoint P: 0, 0, 0\n";

#[test]
fn segre_json() {
    let out = run(
        HAK1,
        &["segre", "--ideal", "F", "--point", "P", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["segre"], serde_json::json!([0, 1, 1, 2]));
    assert_eq!(v["stable"], Value::Bool(true));
    assert_eq!(v["trials"], 4);
}

#[test]
fn seed_is_reproducible() {
    let args = [
        "vogel", "--ideal", "F", "--point", "P", "--seed", "11", "--format", "json",
    ];
    let mut a = json(&run(HAK1, &args));
    let mut b = json(&run(HAK1, &args));
    a.as_object_mut().unwrap().remove("elapsed_ms");
    b.as_object_mut().unwrap().remove("elapsed_ms");
    assert_eq!(a, b);
}

#[test]
fn text_output() {
    let out = run(HAK1, &["polar", "--ideal", "F", "--point", "P"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("polar: [1,1,1,0]"), "{text}");
}

#[test]
fn exit_codes() {
    let bad = run("ring x\nideal I x\n", &["dim", "--ideal", "I"]);
    assert_eq!(bad.status.code(), Some(2));
    let improper = run(
        "ring x y\nideal X: x\nideal Xy: x*y\npoint O: 0, 0\n",
        &[
            "intersect",
            "--cycles",
            "X",
            "Xy",
            "--point",
            "O",
            "--format",
            "json",
        ],
    );
    assert_eq!(improper.status.code(), Some(4));
    assert_eq!(json(&improper)["error"]["code"], "improper_intersection");
    let mismatch = run(
        "ring x y\nideal C: x^2 - y^3\npoint O: 0, 0\nexpect mult --ideal C --point O => mult=3\n",
        &["check"],
    );
    assert_eq!(mismatch.status.code(), Some(1));
}

#[test]
fn syntax_error_position() {
    let out = run(
        "ring x\nideal I x\n",
        &["dim", "--ideal", "I", "--format", "json"],
    );
    let v = json(&out);
    assert_eq!(v["error"]["code"], "syntax_error");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("line 2, column 9"));
}
