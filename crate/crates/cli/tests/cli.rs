use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const SMALL_EXAMPLE: &str = "1 2 3\n1 4 5\n3 4 5\n";
const C4: &str = "1 2\n2 3\n3 4\n4 1\n";
const P4: &str = "1 2\n2 3\n3 4\n";
const COLLAR_21: &str = "1 2 3\n11 111 112\n12 121 122\n21 211 212\n22 221 222\n31 311 312\n\
32 321 322\n1 11 12\n2 21 22\n3 31 32\n111 211 311\n112 212 312\n121 221 321\n122 222 322\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyperline"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn values(v: &Value) -> Vec<f64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect()
}

fn assert_close(actual: &[f64], expected: &[f64]) {
    assert_eq!(actual.len(), expected.len(), "{actual:?}");
    for (a, e) in actual.iter().zip(expected) {
        assert!((a - e).abs() < 1e-9, "{actual:?} vs {expected:?}");
    }
}

#[test]
fn info_small_example() {
    let o = run(&["info", "-"], SMALL_EXAMPLE);
    assert!(o.status.success());
    let text = stdout(&o);
    for needle in [
        "n=5 m=3 rank=3 corank=3",
        "zagreb: 17",
        "connected: true",
        "uniform: k=3",
        "linear: false",
        "collar: no",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
}

#[test]
fn info_json_and_collar_status() {
    let v = json(&run(&["info", "-", "--json"], C4));
    assert_eq!(v["collar"], true);
    assert_eq!(v["zagreb"], 16);
    assert_eq!(v["uniform"], 2);
}

#[test]
fn info_warns_when_disconnected() {
    let text = stdout(&run(&["info", "-"], "a b\nc d\n"));
    assert!(text.contains("connected: false"));
    assert!(text.contains("warning: hypergraph is disconnected"));
}

#[test]
fn line_edgelists() {
    assert_eq!(
        stdout(&run(&["line", "-"], SMALL_EXAMPLE)),
        "0 1 1\n0 2 1\n1 2 2\n"
    );
    assert_eq!(stdout(&run(&["line", "-"], P4)), "0 1 1\n1 2 1\n");
    assert_eq!(stdout(&run(&["line", "-"], "a b\nc d\n")), "");
}

#[test]
fn line_matrix_and_json() {
    assert_eq!(
        stdout(&run(&["line", "-", "--format", "matrix"], SMALL_EXAMPLE)),
        "3 3\n0 1 1\n1 0 2\n1 2 0\n"
    );
    let v = json(&run(&["line", "-", "--format", "json"], SMALL_EXAMPLE));
    assert_eq!(v["order"], 3);
    assert_eq!(v["degrees"], serde_json::json!([2, 3, 3]));
    assert_eq!(v["edges"][2]["multiplicity"], 2);
    assert_eq!(v["edge_labels"][0], "{1,2,3}");
}

#[test]
fn spectra() {
    let r3 = 3f64.sqrt();
    let v = json(&run(&["spectrum", "-"], SMALL_EXAMPLE));
    assert_close(&values(&v["eigenvalues"]), &[1.0 + r3, 1.0 - r3, -2.0]);
    assert_eq!(v["matrix"], "line-adjacency");

    let v = json(&run(
        &["spectrum", "-", "--matrix", "signless-laplacian"],
        SMALL_EXAMPLE,
    ));
    assert_close(
        &values(&v["eigenvalues"]),
        &[4.0 + r3, 4.0 - r3, 1.0, 0.0, 0.0],
    );
    assert_eq!(v["spectrum"][3]["multiplicity"], 2);

    let v = json(&run(
        &["spectrum", "-", "--matrix", "signless-laplacian"],
        "1 2\n",
    ));
    assert_close(&values(&v["eigenvalues"]), &[2.0, 0.0]);
}

#[test]
fn bad_tolerance_is_a_usage_error() {
    let o = run(&["spectrum", "-", "--tol", "0"], SMALL_EXAMPLE);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_reports() {
    let o = run(&["check", "-"], SMALL_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(
        (v["rank"].as_u64(), v["corank"].as_u64()),
        (Some(3), Some(3))
    );
    assert_eq!(v["connected"], true);
    assert_eq!(v["uniform"], 3);
    for e in v["entries"].as_array().unwrap() {
        for key in ["name", "inputs", "values", "pass"] {
            assert!(e.get(key).is_some(), "{e}");
        }
    }

    let v = json(&run(&["check", "-"], COLLAR_21));
    let entry = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "collar ⇒ −3 eigenvalue")
        .expect("collar entry");
    assert_eq!(entry["pass"], true);
}

#[test]
fn power_commands() {
    let o = run(
        &["power", "-", "-t", "2", "-k", "5", "--spectrum", "both"],
        P4,
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["agree"], true);
    let f = values(&v["formula"]["eigenvalues"]);
    let d = values(&v["direct"]["eigenvalues"]);
    assert_eq!(f.len(), 11);
    assert_close(&f, &d);

    assert_eq!(
        stdout(&run(&["power", "-", "-t", "1", "-k", "3"], SMALL_EXAMPLE)),
        SMALL_EXAMPLE
    );

    let text = stdout(&run(&["power", "-", "-t", "2", "-k", "5"], P4));
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 5));

    let o = run(&["power", "-", "-t", "2", "-k", "3"], P4);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k < rt"));
}

#[test]
fn collar_commands() {
    let v = json(&run(&["collar", "-"], C4));
    assert_eq!(v["certificate"], serde_json::json!([1, -1, 1, -1]));
    assert_eq!(v["connected"], true);

    let pendant = "1 2\n2 3\n3 4\n4 1\n1 5\n";
    assert_eq!(stdout(&run(&["collar", "-"], pendant)), "none\n");
    let v = json(&run(&["collar", "-", "--search"], pendant));
    assert_eq!(v["edges"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(v["certificate"], serde_json::json!([1, -1, 1, -1, 0]));

    let o = run(&["collar", "-", "--search", "--max-edges", "3"], pendant);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("search cap"));
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "generate",
        "--n",
        "6",
        "--m",
        "4",
        "--max-card",
        "4",
        "--seed",
        "1",
    ];
    let a = stdout(&run(&args, ""));
    assert_eq!(a, stdout(&run(&args, "")));
    assert_eq!(a.lines().count(), 4);
    assert_eq!(run(&["info", "-"], &a).status.code(), Some(0));

    assert_eq!(
        stdout(&run(&["generate", "--n", "2", "--m", "1"], "")),
        "1 2\n"
    );

    let o = run(&["generate", "--n", "3", "--m", "5", "--max-card", "3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_with_two() {
    let o = run(&["info", "-"], "1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cardinality-one hyperedge at line 1"));
    let o = run(&["info", "/nonexistent/file"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn harness_small_corpus() {
    let o = run(&["harness", "--count", "25"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], 25);
    assert_eq!(v["seed"], 42);
}
