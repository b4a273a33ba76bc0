use std::fs;
use std::path::Path;

use oa_codes::cli::{run, Outcome};
use serde_json::Value;

fn oa(args: &[&str]) -> Outcome {
    run(std::iter::once("oa-codes").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn reproduce_example3() {
    let out = oa(&["reproduce", "example3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["schema"], "oa-codes/1");
    assert_eq!(v["matches_expectation"], true);
    let codes: Vec<(String, String)> = v["codes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let r = &c["report"];
            (r["code"].as_str().unwrap().into(), r["classification"].as_str().unwrap().into())
        })
        .collect();
    let nmds: Vec<&str> = codes.iter().filter(|c| c.1 == "NMDS").map(|c| c.0.as_str()).collect();
    assert_eq!(nmds, ["[9,3,6]_3", "[8,3,5]_3", "[7,3,4]_3", "[6,3,3]_3", "[5,3,2]_3", "[4,3,1]_3"]);
    assert_eq!(codes.iter().filter(|c| c.1 == "MDS").count(), 2);
}

#[test]
fn reproduce_is_deterministic() {
    let a = oa(&["reproduce", "table2:k2"]);
    let b = oa(&["reproduce", "table2:k2", "--threads", "1"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reproduce_unknown_target() {
    let out = oa(&["reproduce", "table3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("unknown target"));
}

#[test]
fn construct_then_certify() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "nqmds.oa");
    let out = oa(&["construct", "nqmds", "--s", "8", "--k", "4", "-o", &file]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["runs"], 4096);

    let out = oa(&["certify", &file]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["code"], "((9,1,5))_{8^8 2^1}");
    assert_eq!(v["verdict"], "NQMDS");
    assert_eq!(v["kind"], "certificate");
}

#[test]
fn certify_with_partition() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "ff.oa");
    let part = path(dir.path(), "cosets.part");
    fs::write(&file, "oa v1\n8 3\n2 2 2\n0 0 0\n0 0 1\n0 1 0\n0 1 1\n1 0 0\n1 0 1\n1 1 0\n1 1 1\n").unwrap();
    fs::write(&part, "partition v1\n4 1\n0 7\n1 6\n2 5\n3 4\n").unwrap();
    let out = oa(&["certify", &file, "--partition", &part]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["code"], "((3,4,1))_{2^3}");

    let out = oa(&["verify", "partition", &file, "--partition", &part]);
    assert_eq!(out.code, 0);
    fs::write(&part, "partition v1\n4 2\n0 7\n1 6\n2 5\n3 4\n").unwrap();
    let out = oa(&["verify", "partition", &file, "--partition", &part]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["holds"], false);
    let out = oa(&["certify", &file, "--partition", &part]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("strength"), "{}", out.stderr);
}

#[test]
fn strength_failure_names_the_columns() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "const.oa");
    fs::write(&file, "oa v1\n4 3\n2 2 2\n0 0 0\n0 1 1\n1 0 0\n1 1 1\n").unwrap();
    let out = oa(&["verify", "strength", &file, "--t", "2"]);
    assert_eq!(out.code, 1);
    let v = json(&out);
    assert_eq!(v["holds"], false);
    assert_eq!(v["violating_columns"], serde_json::json!([1, 2]));

    fs::write(&file, "oa v1\n4 2\n2 2\n0 0\n0 1\n1 0\n1 0\n").unwrap();
    let out = oa(&["verify", "strength", &file, "--t", "2"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["violating_columns"], serde_json::json!([0, 1]));
}

#[test]
fn constant_column_fails_strength_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "const.oa");
    fs::write(&file, "oa v1\n4 3\n2 2 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n").unwrap();
    assert_eq!(oa(&["verify", "strength", &file, "--t", "2"]).code, 0);
    fs::write(&file, "oa v1\n4 3\n2 2 2\n0 0 0\n0 1 0\n1 0 0\n1 1 0\n").unwrap();
    let out = oa(&["verify", "strength", &file, "--t", "2"]);
    assert_eq!(out.code, 1);
    let cols = json(&out)["violating_columns"].clone();
    assert!(cols.as_array().unwrap().contains(&Value::from(2)), "{cols}");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "bad.oa");
    fs::write(&file, "oa v1\n2 2\n2 2\n0 1\n0\n").unwrap();
    let out = oa(&["verify", "md", &file]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 5"), "{}", out.stderr);
    let out = oa(&["verify", "md", &path(dir.path(), "missing.oa")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot read"));
}

#[test]
fn construct_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.oa");
    let b = path(dir.path(), "b.oa");
    let p = path(dir.path(), "p.oa");
    let f = path(dir.path(), "f.oa");
    assert_eq!(oa(&["construct", "vandermonde", "--s", "4", "--k", "2", "--n", "5", "-o", &a]).code, 0);
    assert_eq!(oa(&["construct", "vandermonde", "--s", "5", "--k", "2", "--n", "5", "-o", &b]).code, 0);
    assert_eq!(oa(&["construct", "kronecker", "--a", &a, "--b", &b, "-o", &p]).code, 0);
    let out = oa(&["verify", "md", &p]);
    assert_eq!((json(&out)["min_distance"].as_u64(), json(&out)["method"].as_str()), (Some(4), Some("pairwise")));
    assert_eq!(json(&oa(&["verify", "max-strength", &p]))["max_strength"], 2);

    assert_eq!(oa(&["construct", "fold", &p, "--col", "4", "-o", &f]).code, 0);
    let out = oa(&["certify", &f]);
    assert_eq!(json(&out)["code"], "((5,1,3))_{20^4 2^1}");
    let out = oa(&["verify", "irredundant", &f, "--k", "2"]);
    assert_eq!(out.code, 0);
    let out = oa(&["verify", "irredundant", &f, "--k", "3"]);
    assert_eq!(out.code, 1);
}

#[test]
fn classify_accepts_arrays_and_generators() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "a4.gen");
    fs::write(&g, "gen v1\n2 4 8\n1 0 0 0 1 1 1 0\n0 1 0 0 1 1 0 1\n0 0 1 0 1 0 1 1\n0 0 0 1 0 1 1 1\n").unwrap();
    let v = json(&oa(&["classify", &g]));
    assert_eq!(v["code"], "[8,4,4]_2");
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["classification"], "NMDS");

    let a = path(dir.path(), "a4.oa");
    assert_eq!(oa(&["construct", "linear", &g, "-o", &a]).code, 0);
    // the array file carries no generator, so the code is recovered from its rows
    let v = json(&oa(&["classify", &a]));
    assert_eq!(v["code"], "[8,4,4]_2");

    let r = path(dir.path(), "rep.oa");
    assert_eq!(oa(&["construct", "repetition", "--s", "6", "--n", "3", "-o", &r]).code, 0);
    let out = oa(&["classify", &r]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("field"), "{}", out.stderr);
}

#[test]
fn text_output() {
    let out = oa(&["reproduce", "example1", "--format", "text"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("codes.2.report.code: [4,3,1]_2\n"), "{}", out.stdout);
    assert!(out.stdout.contains("matches_expectation: true\n"));
}

#[test]
fn unconstructible_nqmds() {
    let out = oa(&["construct", "nqmds", "--s", "6", "--k", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("orthogonal Latin squares"), "{}", out.stderr);
}

#[test]
fn every_target_matches_its_expectation() {
    for target in oa_codes::reproduce::TARGETS {
        let out = oa(&["reproduce", target]);
        assert_eq!(out.code, 0, "{target}: {}{}", out.stderr, out.stdout);
        assert_eq!(json(&out)["differences"], serde_json::json!([]), "{target}");
    }
}
