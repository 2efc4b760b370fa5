use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbgraphlets"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn k4_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", K4);
    let out = cli(&["--input", &input, "--counts", "cycles"]);
    assert!(out.status.success());
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    let cycles = &json["cycles"];
    assert_eq!(
        (cycles["C3"].as_i64(), cycles["C4"].as_i64(), cycles["C5"].as_i64()),
        (Some(4), Some(3), Some(0))
    );
    assert_eq!(json["metadata"]["l"], 24);
}

#[test]
fn triangle_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tri.txt", "x y\ny z\nz x\n");
    let out = cli(&["--input", &input, "--counts", "order3", "--oracle-check"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["verified"], true);
    assert_eq!(json["order3"]["edge"]["C3"]["x->y"], 1);
}

#[test]
fn missing_file_fails() {
    let out = cli(&["--input", "/nonexistent/graph.txt", "--counts", "cycles"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn self_loop_fails() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "loop.txt", "0 1\n1 1\n");
    let out = cli(&["--input", &input, "--counts", "order3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n3 4\n4 5\n5 3\n");
    for format in ["json", "csv"] {
        let args = [
            "--input",
            &input,
            "--counts",
            "order3,order4,cycles,k6",
            "--format",
            format,
        ];
        let a = cli(&args);
        let b = cli(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn json_holds_integers_only() {
    fn check(v: &Value) {
        match v {
            Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "{n}"),
            Value::Array(a) => a.iter().for_each(check),
            Value::Object(o) => o.values().for_each(check),
            Value::Bool(_) => {}
            other => panic!("unexpected {other}"),
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", K4);
    let out = cli(&[
        "--input",
        &input,
        "--counts",
        "order3,order4,order5,cycles",
        "--timings",
    ]);
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    check(&json);
    assert!(json["metadata"]["stages"].is_object());
}

#[test]
fn csv_layout() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", K4);
    let out = cli(&["--input", &input, "--counts", "order3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // header, 12 directed edges, 4 vertices, totals
    assert_eq!(lines.len(), 18);
    assert!(lines[0].starts_with("location,e:"));
    assert!(lines[1].starts_with("0->1,"));
    assert!(lines[17].starts_with("__total__,"));
}

#[test]
fn generic_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", K4);
    // vertex-rooted triangle: 3 at every vertex of K4
    let tri = write(dir.path(), "tri.pat", "r: 0\n0 1\n1 2\n2 0\n");
    let spec = format!("generic:{tri}");
    let out = cli(&["--input", &input, "--counts", &spec, "--oracle-check"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json[&spec]["values"]["0|"], 3);
    assert_eq!(json[&spec]["total"], 12);

    let k7: String = (0..7)
        .flat_map(|u| (u + 1..7).map(move |v| format!("{u} {v}\n")))
        .collect();
    let input = write(dir.path(), "k7.txt", &k7);
    let k6: String = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| format!("{u} {v}\n")))
        .collect();
    let pat = write(dir.path(), "k6.pat", &format!("r: 0 1\n{k6}"));
    let spec = format!("generic:{pat}");
    let out = cli(&["--input", &input, "--counts", &format!("{spec},k6"), "--oracle-check"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["k6"]["edge"]["K6"]["0->1"], 5);
    assert_eq!(json["k6"]["totals"]["K6"], 5 * 42);
}

#[test]
fn unknown_counter_fails() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", K4);
    let out = cli(&["--input", &input, "--counts", "order9"]);
    assert!(!out.status.success());
}
