use std::process::Command;

use serde_json::Value;

fn regalg(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_regalg")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap();
    (out.status.code().expect("exited"), text)
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, text) = regalg(&all);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

#[test]
fn gaussian_relations_pass() {
    let (code, v) = json(&["relations", "--ring", "zi", "--max-norm", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["ring"], "Z[i]");
}

#[test]
fn expectation_kills_translations() {
    let (code, v) = json(&["expect", "--ring", "z", "--expr", "u[1] e[2]"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["result"], "0");
    let (_, v) = json(&["expect", "--ring", "z", "--expr", "e[2] + u[1]", "--mode", "additive"]);
    assert_eq!(v["results"]["result"], "p[0+(2)]");
}

#[test]
fn kms_quarter() {
    let (code, v) = json(&["kms", "--ring", "z", "--beta", "2", "--trunc", "10000", "--expr", "f[2;0]"]);
    assert_eq!(code, 0);
    let value = v["results"]["value"].as_f64().unwrap();
    let bound = v["results"]["error_bound"].as_f64().unwrap();
    assert!((value - 0.25).abs() <= bound, "{value} ± {bound}");
    assert!(v["results"]["tail_bound"].as_f64().unwrap() > 0.0);
}

#[test]
fn kms_with_galois_parameter() {
    let (code, v) = json(&["kms", "--ring", "zi", "--trunc", "500", "--expr", "1", "--alpha", "1mod2,1mod1+i"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["results"]["value"], 1.0);
}

#[test]
fn witness_examples() {
    let (code, v) = json(&["witness", "--expr", "e[2]"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["s"], "s[4]");
    let (code, v) = json(&["separate", "--expr", "e[2] + s[2]"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["family"]["projections"][0], "p[2+(8)]");
}

#[test]
fn structural_audits_pass() {
    for args in [
        &["adele", "--levels", "2,3,6", "--embed", "5,-1"][..],
        &["adele", "--ring", "zi", "--levels", "1+i,2,2+2i"],
        &["crt", "--max-norm", "60"],
        &["crt", "--ring", "fq:3", "--m", "T^2+2"],
        &["bc-relations", "--ring", "zw", "--max-norm", "7"],
        &["oracle-diff", "--ring", "zi", "--samples", "40", "--seed", "7"],
        &["oracle-diff", "--expr", "s[2] u[1]", "--rhs", "u[2] s[2]"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}: {v}");
    }
    let (_, v) = json(&["adele", "--levels", "2,3,6", "--embed", "5"]);
    assert_eq!(v["results"]["towers"]["5"]["6"], "5");
}

#[test]
fn reports_are_deterministic() {
    let args = ["oracle-diff", "--ring", "zw", "--samples", "30", "--seed", "3", "--json"];
    assert_eq!(regalg(&args), regalg(&args));
}

// forced failures: exit 1 with the reason in the report

#[test]
fn failed_checks_exit_one() {
    let (code, v) = json(&["oracle-diff", "--expr", "s[2]", "--rhs", "s[3]"]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    assert!(!v["counterexamples"].as_array().unwrap().is_empty());

    let (code, v) = json(&["witness", "--expr", "e[2] + s[2]"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("not self-adjoint"));

    let (code, v) = json(&["witness", "--expr", "1/2*e[2]"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("no witness"));

    let (code, _) = json(&["kms", "--beta", "1", "--expr", "1"]);
    assert_eq!(code, 1);
    let (code, _) = json(&["adele", "--levels", "6"]);
    assert_eq!(code, 1);
    let (code, _) = json(&["bc-relations", "--ring", "fq:2"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["relations", "--bogus"][..],
        &["frobnicate"],
        &["expect", "--expr", "u[1"],
        &["expect", "--ring", "q", "--expr", "1"],
        &["expect", "--expr", "p[1+(0)]"],
        &["kms", "--expr", "1", "--alpha", "1of2"],
        &["crt"],
        &["oracle-diff", "--expr", "s[2]"],
    ] {
        let (code, text) = regalg(args);
        assert_eq!(code, 2, "{args:?}: {text}");
    }
    let (_, text) = regalg(&["expect", "--expr", "u[1"]);
    assert!(text.contains("column 3"), "{text}");
}
