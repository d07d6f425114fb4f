use std::process::{Command, Output};

use serde_json::Value;

fn shimura(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shimura")).args(args).env_remove("SHIMURA_THREADS").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = shimura(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

/// `key: kind` pairs, with kinds `int`, `str`, `bool`, `array`, `object`,
/// `int?` (integer or null).
fn has_shape(v: &Value, fields: &[(&str, &str)]) {
    for (key, kind) in fields {
        let x = v.get(*key).unwrap_or_else(|| panic!("missing `{key}` in {v}"));
        let ok = match *kind {
            "int" => x.is_u64() || x.is_i64(),
            "int?" => x.is_u64() || x.is_null(),
            "str" => x.is_string(),
            "bool" => x.is_boolean(),
            "array" => x.is_array(),
            "object" => x.is_object(),
            other => panic!("unknown kind {other}"),
        };
        assert!(ok, "`{key}` should be {kind}: {x}");
    }
}

#[test]
fn verify_identities_reports_no_failures() {
    let v = json(&["verify-identities", "--json"]);
    has_shape(&v, &[("checks", "array"), ("total", "int"), ("failures", "int")]);
    assert_eq!(v["failures"], 0);
    assert!(v["total"].as_u64().unwrap() > 60);
    has_shape(&v["checks"][0], &[("tower", "str"), ("identity", "str"), ("passed", "bool"), ("detail", "str")]);
}

#[test]
fn catalog_lists_three_signatures() {
    let v = json(&["catalog"]);
    let sigs: Vec<(String, Vec<u64>)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            has_shape(t, &[("name", "str"), ("signature", "object"), ("norm_of_i", "int"), ("recursion", "array")]);
            let orders = t["signature"]["orders"].as_array().unwrap().iter().map(|o| o.as_u64().unwrap()).collect();
            (t["name"].as_str().unwrap().to_string(), orders)
        })
        .collect();
    assert_eq!(
        sigs,
        vec![
            ("elkies2412".into(), vec![2, 4, 12]),
            ("elkies239".into(), vec![2, 3, 9]),
            ("new336".into(), vec![3, 3, 6]),
        ]
    );
    let csv = String::from_utf8(shimura(&["catalog", "--csv"]).stdout).unwrap();
    assert!(csv.starts_with("name,signature,norm_of_i,step_degree,bad_primes\n"));
    assert!(csv.contains("new336,\"(0;3,3,6)\""));
}

#[test]
fn genus_of_level_two_is_zero() {
    let v = json(&["genus", "--tower", "new336", "--level", "2"]);
    has_shape(&v, &[("tower", "str"), ("level", "int"), ("genus", "int"), ("method", "str")]);
    assert_eq!(v["genus"], 0);
}

#[test]
fn genus_with_zeta_cross_check() {
    let v = json(&["genus", "--tower", "elkies239", "--level", "3", "--prime", "7", "--zeta", "3"]);
    has_shape(&v, &[("p", "int"), ("extension_degree", "int"), ("zeta", "object")]);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["zeta"]["genus"], 1);
}

#[test]
fn count_and_lambda_shapes() {
    let v = json(&["count", "--tower", "elkies2412", "--prime", "13", "--level", "3", "--extensions", "2"]);
    has_shape(&v, &[("tower", "str"), ("p", "int"), ("ext", "int"), ("q", "int"), ("level", "int"), ("places", "array")]);
    assert_eq!(v["places"].as_array().unwrap().len(), 2);
    let v = json(&["lambda", "--tower", "new336", "--prime", "13", "--ext", "2", "--level", "4"]);
    has_shape(&v, &[("tower", "str"), ("q", "int"), ("splitting_count", "int"), ("sqrt_q_minus_1", "int?"), ("levels", "array")]);
    assert_eq!(v["splitting_count"], 12);
    assert_eq!(v["levels"][1]["lambda"], serde_json::json!(["48", "1"]));
    let v = json(&["lambda", "--tower", "new336", "--prime", "13", "--level", "3"]);
    assert_eq!(v["sqrt_q_minus_1"], Value::Null);
}

#[test]
fn splitting_and_code_shapes() {
    let v = json(&["splitting", "--tower", "new336", "--prime", "13", "--ext", "2"]);
    has_shape(&v, &[("q", "int"), ("exceptional", "array"), ("splitting", "array"), ("size", "int"), ("closed", "bool")]);
    assert_eq!(v["size"], 12);
    let v = json(&["code", "--tower", "new336", "--prime", "13", "--ext", "2", "--level", "3", "--pole-bound", "2"]);
    has_shape(&v, &[("params", "object"), ("rank", "int"), ("points", "array"), ("generator", "array"), ("min_distance", "int?")]);
    has_shape(&v["params"], &[("len", "int"), ("dim", "int"), ("d_star", "int"), ("q", "int"), ("level", "int"), ("m", "int")]);
    assert_eq!(v["rank"], v["params"]["dim"]);
    assert!(v["min_distance"].as_u64().unwrap() >= v["params"]["d_star"].as_u64().unwrap());
}

#[test]
fn modpoly_exact_coefficients() {
    let v = json(&["modpoly", "--tower", "elkies2412", "--level", "1"]);
    has_shape(&v, &[("bidegree", "array"), ("coefficients", "array"), ("symmetry", "object")]);
    assert_eq!(v["bidegree"], serde_json::json!([3, 3]));
    let c = &v["coefficients"][0];
    has_shape(c, &[("i", "int"), ("j", "int"), ("c", "object")]);
    assert_eq!(c["c"], serde_json::json!({ "a": [-19683, 4], "b": [0, 1] }));
    let v = json(&["modpoly", "--tower", "new336", "--prime", "10007"]);
    assert_eq!(v["matches_reduction"], true);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["lambda", "--tower", "new336", "--prime", "13", "--ext", "2"][..],
        &["modpoly", "--tower", "new336", "--seed", "9", "--samples", "50"][..],
        &["count", "--tower", "elkies239", "--prime", "11", "--level", "4", "--csv"][..],
    ] {
        let a = shimura(args);
        let b = shimura(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let base = ["count", "--tower", "new336", "--prime", "13", "--ext", "2", "--level", "4"];
    let one = Command::new(env!("CARGO_BIN_EXE_shimura")).args(base).env("SHIMURA_THREADS", "1").output().unwrap();
    let mut args = base.to_vec();
    args.extend(["--threads", "4"]);
    let four = Command::new(env!("CARGO_BIN_EXE_shimura")).args(&args).env("SHIMURA_THREADS", "1").output().unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn errors_have_codes_and_exit_two() {
    for (args, code) in [
        (&["genus", "--tower", "nope", "--level", "2"][..], "unknown_tower"),
        (&["count", "--tower", "new336", "--prime", "9", "--level", "3"][..], "not_prime"),
        (&["count", "--tower", "new336", "--prime", "3", "--level", "3"][..], "bad_reduction"),
        (&["count", "--tower", "new336", "--prime", "13", "--ext", "7", "--level", "3"][..], "ceiling_exceeded"),
        (&["code", "--tower", "new336", "--prime", "13", "--level", "3", "--pole-bound", "1"][..], "empty_splitting_locus"),
    ] {
        let out = shimura(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["code"], code, "{args:?}");
    }
    assert_eq!(shimura(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(shimura(&["count", "--tower", "new336"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_one() {
    let dir = std::env::temp_dir().join(format!("shimura-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut towers = json(&["catalog"]);
    let mut t = towers.as_array_mut().unwrap().remove(2);
    t["name"] = "tampered".into();
    t["j_minus_one"]["scalar"]["a"] = serde_json::json!([7, 1]);
    let path = dir.join("tampered.json");
    std::fs::write(&path, serde_json::to_string(&t).unwrap()).unwrap();
    let out = shimura(&["--config", path.to_str().unwrap(), "verify-identities", "--tower", "tampered"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["failures"].as_u64().unwrap() > 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
