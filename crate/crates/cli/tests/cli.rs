use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polyadica"));
    cmd.args(args).env_remove("POLYADICA_MODE").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn polyadica");
    // The binary may exit before reading stdin (argument errors, commands without input).
    if let Err(e) = child.stdin.take().unwrap().write_all(stdin.as_bytes()) {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe, "{e}");
    }
    let out = child.wait_with_output().unwrap();
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8(out.stdout).unwrap() }
}

fn run(args: &[&str], stdin: &str) -> Run {
    run_with(args, stdin, &[])
}

fn ok(args: &[&str], stdin: &str) -> Value {
    let r = run(args, stdin);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stdout);
    r.json()
}

fn error_code(r: &Run) -> String {
    r.json()["error"].as_str().unwrap().to_string()
}

#[test]
fn vector_product_example() {
    let path = fixture("vectors_example.json");
    let path = path.to_str().unwrap();
    assert_eq!(ok(&["vecmul", "--in", path], ""), json!({ "coords": ["50", "180", "72"] }));
    assert_eq!(ok(&["vecmul", "--via-matrix", "--in", path], ""), json!({ "coords": ["50", "180", "72"] }));
}

#[test]
fn structure_constants_and_quervectors() {
    let f = ok(&["vecmul", "--structure-constants", "--dim", "3"], "");
    assert_eq!(f["constants"].as_array().unwrap().len(), 3);
    assert_eq!(f["constants"][0], json!({ "inputs": [1, 2, 3, 1], "output": 1, "value": 1 }));
    assert_eq!(ok(&["quervec"], "[2, 3, 4]"), json!({ "coords": ["1/12", "1/8", "1/6"] }));
    let r = run(&["quervec"], "[2, 0, 4]");
    assert_eq!((r.code, error_code(&r)), (1, "ZeroCoordinate".into()));
}

#[test]
fn tower_example() {
    let t = ok(&["tower-shape", "--arities", "5,3,4"], "");
    assert_eq!(t["size"], 24);
    assert_eq!(t["dimension"], 96);
    assert_eq!(t["final_arity"], json!({ "outer": 4, "flat": 25 }));
    assert_eq!(t["stated_arity_unverified"], 13);
    assert_eq!(t["chain_warnings"], json!([0, 1]));
    assert_eq!(t["pattern"][0], json!([1, 14]));
    assert_eq!(t["pattern"][23], json!([24, 1]));
    let r = run(&["tower-shape", "--arities", "5,3,4", "--strict"], "");
    assert_eq!((r.code, error_code(&r)), (1, "ChainBroken".into()));
    let chained = ok(&["tower-shape", "--arities", "3,5,9", "--kappas", "2,2", "--render"], "");
    assert_eq!(chained["chain_warnings"], json!([]));
    assert_eq!(chained["render"].as_str().unwrap().lines().count(), 64);
}

#[test]
fn ternary_quaternion_product() {
    let path = fixture("quaternion_ternary.json");
    let path = path.to_str().unwrap();
    let cyclic = ok(&["mul", "--algebra", "H", "--arity", "3", "--in", path], "");
    let dense = ok(&["mul", "--algebra", "H", "--arity", "3", "--oracle", "dense", "--in", path], "");
    assert_eq!(cyclic, dense);
    assert_eq!(
        cyclic["entries"],
        json!([
            { "level": 2, "coeffs": ["-4", "-8", "-12", "14"] },
            { "level": 2, "coeffs": ["-1", "1", "-1", "1"] },
        ])
    );
}

#[test]
fn dual_product_matches_dense_oracle() {
    let path = fixture("dual_four_ary.json");
    let path = path.to_str().unwrap();
    let cyclic = ok(&["mul", "--algebra", "dual", "--in", path], "");
    let dense = ok(&["mul", "--algebra", "dual", "--oracle", "dense", "--in", path], "");
    assert_eq!(cyclic, dense);
    assert_eq!(cyclic["arity"], 4);
}

#[test]
fn binary_products() {
    assert_eq!(ok(&["mul", "--arity", "2"], r#"["2/3", "9"]"#), json!("6"));
    assert_eq!(ok(&["mul", "--arity", "2", "--sum"], r#"["2/3", "9"]"#), json!("29/3"));
    assert_eq!(ok(&["mul", "--algebra", "dual", "--arity", "2"], "[[2, 3], [4, 5]]"), json!({ "a": "8", "b": "22" }));
    let e = |i: usize| {
        let mut c = vec![0; 8];
        c[i] = 1;
        json!(c)
    };
    let e1e2 = ok(&["mul", "--algebra", "O", "--arity", "2"], &json!([e(1), e(2)]).to_string());
    assert_eq!(e1e2["coeffs"], json!(["0", "0", "0", "1", "0", "0", "0", "0"]));
    assert_eq!(
        ok(&["quer", "--algebra", "H", "--arity", "2", "--conj"], "[1, 2, 3, 4]")["coeffs"],
        json!(["1", "-2", "-3", "-4"])
    );
    assert_eq!(ok(&["quer", "--algebra", "C", "--arity", "2"], "[3, 4]")["coeffs"], json!(["3/25", "-4/25"]));
    assert_eq!(ok(&["norm", "--algebra", "H", "--arity", "2"], "[1, 2, 3, 4]"), json!({ "norm_sq": "30" }));
    assert_eq!(ok(&["quer", "--arity", "2"], "\"-4\""), json!("-1/4"));
}

#[test]
fn units_and_identities() {
    let unit = ok(&["identity-check", "--kind", "unit", "--algebra", "dual", "--arity", "4"], "");
    assert_eq!(unit["entries"], json!([{ "a": "1", "b": "0" }, { "a": "1", "b": "0" }, { "a": "1", "b": "0" }]));
    let path = fixture("neutral_polyad.json");
    assert_eq!(
        ok(&["identity-check", "--kind", "neutral", "--in", path.to_str().unwrap()], ""),
        json!({ "neutral": true })
    );
    let nil = r#"{"arity": 4, "algebra": "dual", "entries": [[0, 3], [0, -2], [5, 7]]}"#;
    assert_eq!(
        ok(&["identity-check", "--kind", "nilpotent", "--algebra", "dual"], nil),
        json!({ "nilpotent": true, "ell": 1 })
    );
    assert_eq!(
        ok(&["identity-check", "--kind", "idempotent", "--algebra", "dual"], nil),
        json!({ "idempotent": false, "ell": 1 })
    );
    let p = ok(&["power", "--ell", "2"], r#"{"entries": [1, 2]}"#);
    assert_eq!(p["entries"], json!(["4", "8"]));
}

#[test]
fn querelements_and_norms() {
    let zq = ok(&["quer"], r#"{"entries": [1, 2, 3, 4]}"#);
    assert_eq!(zq["entries"], json!(["1/24", "1/12", "1/8", "1/6"]));
    assert_eq!(zq["arity"], 5);
    let norm = ok(&["norm", "--algebra", "C"], r#"{"entries": [[1, 1], [2, 0], [0, 3]]}"#);
    assert_eq!(norm, json!({ "norm_sq": "72", "arity": 4 }));
    let quer = ok(&["norm", "--algebra", "C", "--quer"], r#"{"entries": [[1, 1], [2, 0], [0, 3]]}"#);
    assert_eq!(quer["norm_sq"], "1/5184");
}

#[test]
fn domain_errors_exit_one() {
    let r = run(&["quer"], r#"{"entries": [1, 0, 3]}"#);
    assert_eq!((r.code, error_code(&r)), (1, "NonInvertibleEntry".into()));
    assert!(r.json()["detail"].as_str().unwrap().contains("z_2"));
    let r = run(&["norm", "--algebra", "dual"], r#"{"entries": [[1, 1], [2, 0]]}"#);
    assert_eq!((r.code, error_code(&r)), (1, "UnnormedAlgebra".into()));
    let r = run(&["mul", "--algebra", "O", "--arity", "3"], "[[[1,0,0,0,0,0,0,0],[1,0,0,0,0,0,0,0]]]");
    assert_eq!((r.code, error_code(&r)), (1, "NonAssociative".into()));
    let r = run(&["mul", "--arity", "3"], "[[1, 2], [3, 4]]");
    assert_eq!((r.code, error_code(&r)), (1, "WrongFactorCount".into()));
    let r = run(&["mul", "--arity", "3"], r#"[[1, 2], [3, 4], {"entries": [1, 2, 3]}]"#);
    assert_eq!((r.code, error_code(&r)), (1, "ArityMismatch".into()));
}

#[test]
fn malformed_input_exits_two() {
    let r = run(&["quer"], "{not json");
    assert_eq!((r.code, error_code(&r)), (2, "MalformedInput".into()));
    let r = run(&["vecmul"], r#"{"vectors": []}"#);
    assert_eq!(r.code, 2);
    let r = run(&["mul", "--algebra", "Z"], "[]");
    assert_eq!(r.code, 2);
    assert_eq!(run(&["props", "--suite", "no-such-suite"], "").code, 2);
    assert_eq!(run(&["--mode", "decimal", "quervec"], "[1, 2]").code, 2);
    assert_eq!(run_with(&["quervec"], "[1, 2]", &[("POLYADICA_MODE", "decimal")]).code, 2);
}

#[test]
fn float_mode() {
    let v = run_with(&["quervec"], "[2, 4]", &[("POLYADICA_MODE", "float")]).json();
    assert_eq!(v, json!({ "coords": [0.25, 0.5] }));
    let n = ok(&["--mode", "float", "norm", "--algebra", "C", "--arity", "2"], "[3, 4]");
    assert_eq!(n, json!({ "norm_sq": 25.0, "norm": 5.0 }));
}

#[test]
fn imaginary_algebras() {
    let hq = r#"{"kind": "half_quaternion", "factors": [{"c": 1, "d": 2}, {"c": 3, "d": -1}, {"c": 0, "d": 5}]}"#;
    let sq = ok(&["imaginary", "two-squares"], hq);
    assert_eq!(sq["holds"], true);
    assert_eq!(ok(&["imaginary", "mul"], hq), ok(&["imaginary", "mul", "--components"], hq));
    assert_eq!(
        ok(&["imaginary", "quer", "--kind", "half_quaternion"], r#"{"c": 3, "d": 4}"#),
        json!({ "kind": "half_quaternion", "c": "-3/25", "d": "-4/25" })
    );
    let unit = ok(&["imaginary", "unit", "--kind", "half_quaternion", "--grid", "1"], "");
    assert_eq!(unit["unit"], Value::Null);
    let path = fixture("half_octonion_nestings.json");
    let n = ok(&["imaginary", "nestings", "--in", path.to_str().unwrap()], "");
    assert_eq!(n["associative"], false);
    assert_eq!(n["nestings"][2], json!({ "kind": "half_octonion", "a": "0", "b": "0", "c": "0", "d": "0" }));
    let c = r#"{"kind": "imaginary_complex", "factors": [{"b": 2}, {"b": 3}, {"b": "1/2"}]}"#;
    assert_eq!(ok(&["imaginary", "mul"], c), json!({ "kind": "imaginary_complex", "b": "-3" }));
}

#[test]
fn props_are_deterministic() {
    let args = ["props", "--suite", "nary-oracle", "--cases", "60", "--seed", "11"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let r = ok(&["props", "--suite", "norm-multiplicativity", "--cases", "1000", "--seed", "7"], "");
    assert_eq!(r["failures"], json!([]));
    let list = ok(&["props", "--list"], "");
    assert!(list["suites"].as_array().unwrap().len() >= 20);
}

#[test]
fn counterexamples_are_rerunnable() {
    let r = run(&["props", "--suite", "half-octonion-associativity", "--cases", "5"], "");
    assert_eq!(r.code, 1);
    let report = r.json();
    let first = &report["failures"][0]["input"];
    let replay = ok(&["imaginary", "nestings"], &first.to_string());
    assert_eq!(replay["associative"], false);
}
