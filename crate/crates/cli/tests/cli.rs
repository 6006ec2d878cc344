use std::process::{Command, Output};

use serde_json::Value;

fn frobgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobgen")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = frobgen(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, out.status.code().unwrap())
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

const SQUARES: &str = "x1^2+x2^2+x3^2+x4^2";

#[test]
fn chain_examples() {
    let (v, code) = json(&["chain", "-p", "2", "-v", "x,y", "-f", "x^2*y + x*y^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["chain"]["stabilized_at"], 1);
    assert_eq!(strings(&v["chain"]["levels"][0]["groebner"]), ["x", "y"]);

    let (v, code) = json(&["chain", "-p", "5", "-v", "x1,x2,x3,x4", "-f", SQUARES]);
    assert_eq!(code, 0);
    assert_eq!(v["chain"]["stabilized_at"], 1);
    assert_eq!(strings(&v["chain"]["levels"][0]["groebner"]), ["1"]);

    let (v, _) = json(&["chain", "-p", "2", "-v", "x", "-f", "x"]);
    assert_eq!(v["chain"]["stabilized_at"], 1);
    assert_eq!(strings(&v["chain"]["levels"][0]["groebner"]), ["1"]);
}

#[test]
fn report_schema() {
    let (v, _) = json(&["operator", "-p", "2", "-v", "x", "-f", "x", "--power", "2"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "operator");
    assert_eq!(v["context"]["p"], 2);
    assert_eq!(strings(&v["context"]["vars"]), ["x"]);
    assert_eq!(v["context"]["order"], "grevlex");
    let level = &v["chain"]["levels"][0];
    assert!(level["s"].is_u64() && level["max_gen_degree"].is_u64() && level["groebner"].is_array());
    assert!(v["chain"]["cap"].is_u64());
    assert_eq!(v["operator"]["normal_form"], "D[1]");
    assert_eq!(v["operator"]["level"], 1);
    assert_eq!(v["operator"]["verified"], true);
    assert_eq!(v["witness"]["expr"], "compose(twist(D[1]), D[1])");
    assert_eq!(v["witness"]["target_power"], 2);
}

#[test]
fn operator_examples() {
    let (v, code) = json(&["operator", "-p", "5", "-v", "x1,x2,x3,x4", "-f", SQUARES]);
    assert_eq!(code, 0);
    assert_eq!(v["operator"]["normal_form"], "4 * D[2,2,2,2]");
    assert_eq!(v["operator"]["verified"], true);

    let (v, _) = json(&["operator", "-p", "2", "-v", "x,y", "-f", "x^3 + y^2", "--order", "lex"]);
    assert_eq!(v["context"]["order"], "lex");
    assert_eq!(v["operator"]["verified"], true);
}

#[test]
fn text_and_json_agree() {
    let args = ["operator", "-p", "3", "-v", "x,y", "-f", "x^2*y + x*y^2", "--power", "2"];
    let text = String::from_utf8(frobgen(&args).stdout).unwrap();
    let (v, _) = json(&args);
    for level in v["chain"]["levels"].as_array().unwrap() {
        let gens = strings(&level["groebner"]).join(", ");
        assert!(text.contains(&format!("level {}: ({gens}) max_gen_degree={}", level["s"], level["max_gen_degree"])));
    }
    assert!(text.contains(&format!("stabilized_at: {}", v["chain"]["stabilized_at"])));
    assert!(text.contains(&format!("operator: {}", v["operator"]["normal_form"].as_str().unwrap())));
    assert!(text.contains(&format!("operator_level: {}", v["operator"]["level"])));
    assert!(text.contains(&format!("witness: {}", v["witness"]["expr"].as_str().unwrap())));
}

#[test]
fn verify_examples() {
    let run = |op: &str, f: &str, n: &str| frobgen(&["verify", "-p", "2", "-v", "x", "-f", f, "--op", op, "-N", n]);
    assert_eq!(run("D[1]", "x", "1").status.code(), Some(0));
    assert_eq!(run("x^2 * D[3]", "x", "2").status.code(), Some(0));
    let out = run("D[1]", "x^2", "1");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("verified: false"));
    assert!(!out.stderr.is_empty());
    // An operator above the stated level is rejected rather than misread.
    assert_eq!(run("x^2 * D[3]", "x", "1").status.code(), Some(1));
}

#[test]
fn root_examples() {
    let (v, code) = json(&["root", "-p", "2", "-v", "x,y", "-s", "1", "-g", "x^2*y + x*y^2"]);
    assert_eq!(code, 0);
    let coords: Vec<(&str, &str)> = v["root"]["coords"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["basis"].as_str().unwrap(), c["coord"].as_str().unwrap()))
        .collect();
    assert_eq!(coords, [("y", "x"), ("x", "y")]);
    assert_eq!(strings(&v["root"]["groebner"]), ["x", "y"]);

    let (v, _) = json(&["root", "-p", "2", "-v", "x", "-s", "1", "-g", "x^2"]);
    assert_eq!(v["root"]["coords"][0]["basis"], "1");
    assert_eq!(v["root"]["coords"][0]["coord"], "x");

    let (v, _) = json(&["root", "-p", "2", "-v", "x", "-s", "1", "-g", "x"]);
    assert_eq!(strings(&v["root"]["groebner"]), ["1"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| frobgen(args).status.code().unwrap();
    assert_eq!(code(&["chain", "-p", "4", "-v", "x", "-f", "x"]), 2);
    assert_eq!(code(&["chain", "-p", "2", "-v", "x", "-f", "x +"]), 2);
    assert_eq!(code(&["chain", "-p", "2", "-v", "x", "-f", "y"]), 2);
    assert_eq!(code(&["chain", "-p", "2", "-v", "x", "-f", "1"]), 2);
    assert_eq!(code(&["chain", "-p", "2", "-v", "x", "-f", "x", "--order", "deglex"]), 2);
    assert_eq!(code(&["chain", "-p", "2", "-v", "x"]), 2);
    assert_eq!(code(&["verify", "-p", "2", "-v", "x", "-f", "x", "--op", "D[1,1]", "-N", "1"]), 2);

    let out = frobgen(&["chain", "-p", "2", "-v", "x,y", "-f", "x^3 + y^2", "--max-level", "1", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["chain"]["stabilized_at"].is_null());
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&["operator", "-p", "2", "-v", "x,y", "-f", "x^3 + y^2", "--max-level", "1"]), 3);
}

#[test]
fn errors_stay_off_stdout() {
    let out = frobgen(&["chain", "-p", "2", "-v", "x", "-f", "x +"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("syntax error"));
}

#[test]
fn oracle_cross_check() {
    let out = frobgen(&["chain", "-p", "3", "-v", "x,y", "-f", "x^2*y + y^3 + x", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic() {
    let args = ["operator", "-p", "5", "-v", "x,y,z", "-f", "x^3 + y^2*z + 2*x*z", "--json", "--power", "2"];
    assert_eq!(frobgen(&args).stdout, frobgen(&args).stdout);
}
