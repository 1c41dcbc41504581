//! The `edgering` binary against fixture files: exit codes, output
//! stability and round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use edgering_cli::graph_file;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn edgering(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgering"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn hexagon_analysis() {
    let out = edgering(&["analyze", "--input", &fixture("c6.txt"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hvector"]["coefficients"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["classification"]["gorenstein_combinatorial"], true);
    assert_eq!(v["classification"]["gorenstein_palindromic"], true);
    assert_eq!(v["bipartition"]["x"], serde_json::json!([1, 3, 5]));
}

#[test]
fn cube_analysis() {
    let out = edgering(&["analyze", "--input", &fixture("q3.txt"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hvector"]["coefficients"], serde_json::json!([1, 5, 9, 1]));
    assert_eq!(v["fill"][0]["non_edges"].as_array().unwrap().len(), 4);
    assert_eq!(v["closure"]["hvector"], serde_json::json!([1, 9, 9, 1]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn petersen_exit_codes() {
    let out = edgering(&["analyze", "--input", &fixture("petersen.txt")]);
    assert_eq!(out.status.code(), Some(3));
    let out = edgering(&["hilbert", "--input", &fixture("petersen.txt"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hvector"]["coefficients"], serde_json::json!([1, 5, 15, 25, 5, 1]));
    assert_eq!(v["hvector"]["palindromic"], false);
    let out = edgering(&["analyze", "--hilbert-only", "--input", &fixture("petersen.txt"), "--json"]);
    assert_eq!(json(&out)["hvector"]["krull_dim"], 10);
}

#[test]
fn error_exit_codes() {
    let out = edgering(&["analyze", "--input", &fixture("malformed.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(edgering(&["analyze", "--input", &fixture("triangle.txt")]).status.code(), Some(3));
    assert_eq!(edgering(&["analyze", "--input", &fixture("oversized.txt")]).status.code(), Some(4));
    let out = edgering(&["--max-side", "2", "analyze", "--input", &fixture("q3.txt")]);
    assert_eq!(out.status.code(), Some(4));
    let out = edgering(&["--memory-budget", "64", "hilbert", "--input", &fixture("q3.txt")]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(edgering(&["analyze", "--input", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["analyze", "--input", &fixture("q3.txt"), "--json"];
    let a = edgering(&args);
    let b = edgering(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = ["analyze", "--input", &fixture("q3.txt")];
    assert_eq!(edgering(&text).stdout, edgering(&text).stdout);
}

#[test]
fn generated_graphs_round_trip() {
    for args in [
        ["generate", "--model", "matching-union", "--n", "5", "--k", "3", "--seed", "9"],
        ["generate", "--model", "erdos-bipartite", "--nx", "4", "--p", "0.6", "--seed", "9"],
    ] {
        let a = edgering(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, edgering(&args).stdout);
        let text = String::from_utf8(a.stdout).unwrap();
        let g = graph_file::parse(&text).unwrap();
        assert!(g.is_connected());
        assert_eq!(graph_file::serialize(&g), text);
    }
    let full = edgering(&["generate", "--model", "erdos-bipartite", "--nx", "3", "--ny", "3", "--p", "1"]);
    let g = graph_file::parse(&String::from_utf8(full.stdout).unwrap()).unwrap();
    assert_eq!(g.size(), 9);
}

#[test]
fn enumerate_counts() {
    let out = edgering(&["enumerate", "--nx", "2", "--ny", "2", "--connected", "--count"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "5");
    let out = edgering(&["enumerate", "--nx", "1", "--ny", "1", "--count"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2");
    let out = edgering(&["enumerate", "--nx", "5", "--ny", "6", "--count"]);
    assert_eq!(out.status.code(), Some(4));
    let out = edgering(&["enumerate", "--nx", "2", "--ny", "2", "--connected"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.split("\n\n").count(), 5);
}

#[test]
fn verify_commands() {
    let out = edgering(&["verify", "--exhaustive", "8", "--theorem", "main"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let out = edgering(&["verify", "--exhaustive", "4", "--theorem", "closure-minimality", "--labeled", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tallies"]["closure-minimality"]["failed"], 0);
    assert!(v["tallies"]["closure-minimality"]["checked"].as_u64().unwrap() > 0);
    let args = ["verify", "--random", "200", "--seed", "42", "--model", "matching-union", "--theorem", "closure", "--json"];
    let a = edgering(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, edgering(&args).stdout);
    assert_eq!(edgering(&["verify", "--exhaustive", "4", "--theorem", "bogus"]).status.code(), Some(2));
}
