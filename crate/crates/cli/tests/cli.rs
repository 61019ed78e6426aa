use std::path::PathBuf;
use std::process::{Command, Output};

use manin_core::elliptic::{CurveFunction, WeierstrassModel};
use manin_core::funcfield::{parse_field_element, parse_x_polynomial, ConstantField};
use serde_json::Value;

fn manifest(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("manifests").join(name)
}

fn run(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_manin"))
        .arg(args[0])
        .arg(manifest(file))
        .args(&args[1..])
        .output()
        .unwrap()
}

fn json(args: &[&str], file: &str) -> (i32, Value) {
    let out = run(args, file);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

fn all_pass(doc: &Value) -> bool {
    doc["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true)
}

#[test]
fn manin_value_on_the_quadratic_cover() {
    let (code, doc) = json(&["manin"], "legendre-p2.toml");
    assert_eq!(code, 0);
    assert!(all_pass(&doc));
    let sec = &doc["results"]["points"]["P"]["section"];
    let q = ConstantField::Rationals;
    let got = parse_field_element(sec["value"].as_str().unwrap(), q, "s").unwrap();
    let want = parse_field_element("-8/(s*(s^2-4)*(s^2-2))", q, "s").unwrap();
    assert_eq!(got, want);
    assert_eq!(sec["divisor"]["degree"], -5);
    assert_eq!(sec["frame"], "dx/y");
}

#[test]
fn tangency_of_order_three_on_the_biquadratic_cover() {
    let (code, doc) = json(&["tangency"], "legendre-u.toml");
    assert_eq!(code, 0);
    let rows = doc["results"]["points"]["Q"]["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["place"] == "u - 1").unwrap();
    assert_eq!(
        (row["J"].as_i64(), row["I"].as_i64(), row["in_S"].as_bool()),
        (Some(1), Some(3), Some(false))
    );
    assert!(all_pass(&doc));
}

#[test]
fn operator_verification() {
    for file in ["legendre.toml", "legendre-p2.toml", "legendre-u.toml"] {
        let (code, doc) = json(&["verify-pf"], file);
        assert_eq!(code, 0, "{file}");
        assert_eq!(doc["results"], serde_json::json!({"verified": true}));
    }
    let (code, doc) = json(&["find-pf"], "legendre.toml");
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["operator"]["A"], "t^2 - t");
    let (code, doc) = json(&["find-pf", "--pole-bound", "1"], "legendre.toml");
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "hypothesis");
}

#[test]
fn off_curve_point_is_an_input_error() {
    let out = run(&["invariants"], "off-curve.toml");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("point not on curve"));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "input");
}

#[test]
fn failed_hypotheses_exit_with_one() {
    let (code, doc) = json(&["descent-bound"], "charp.toml");
    assert_eq!(code, 1);
    assert!(doc["error"]["message"].as_str().unwrap().contains("semistable"));
    let (code, _) = json(&["manin"], "charp.toml");
    assert_eq!(code, 1);
    let (code, _) = json(&["verify-pf"], "charp.toml");
    assert_eq!(code, 2);
}

#[test]
fn char_p_reports() {
    let (code, doc) = json(&["descent-bound", "--n-max", "12"], "legendre-f5.toml");
    assert_eq!(code, 0);
    assert!(all_pass(&doc));
    let p = &doc["results"]["points"]["P"];
    assert_eq!(p["n_max"], 12);
    assert_eq!(p["bound"].as_i64(), Some(5 * (-2 - 1) + 4 * 5));
    for cmd in ["invariants", "lambda", "mu", "nu", "check-tau"] {
        let (code, doc) = json(&[cmd], "charp.toml");
        assert_eq!(code, 0, "{cmd}");
        assert!(all_pass(&doc), "{cmd}");
    }
}

#[test]
fn unknown_manifest_keys_are_rejected() {
    let dir = std::env::temp_dir().join(format!("manin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    std::fs::write(&path, "characteristic = 0\ncolour = 1\n[curve]\ncubic = \"x^3 + t\"\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_manin"))
        .arg("invariants")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(&path, "characteristic = 4\n[curve]\ncubic = \"x^3 + t\"\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_manin"))
        .arg("invariants")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for (cmd, file) in [("manin", "legendre-u.toml"), ("descent-bound", "legendre-f5.toml")] {
        let a = run(&[cmd], file).stdout;
        let b = run(&[cmd], file).stdout;
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        let reserialized = serde_json::to_string_pretty(&serde_json::from_str::<Value>(&text).unwrap()).unwrap();
        assert_eq!(text.trim_end(), reserialized, "keys are not sorted");
    }
}

const FUNCTION_KEYS: &[&str] = &[
    "value",
    "M",
    "mu",
    "A",
    "B",
    "C",
    "derivation",
    "x",
    "y",
    "discriminant",
    "c4",
    "c6",
    "j",
    "c0",
    "c1",
    "c2",
    "place",
];

/// Every reported function re-parses, and printing the parsed value gives
/// back the same string.
fn round_trip(v: &Value, k: ConstantField, var: &str, model: &WeierstrassModel, seen: &mut usize) {
    match v {
        Value::Object(m) => {
            for (key, x) in m {
                match (key.as_str(), x) {
                    ("place", Value::String(s)) if s == "infinity" => {}
                    ("F", Value::String(s)) => {
                        let f = CurveFunction::parse(s, model, var).unwrap();
                        assert_eq!(&f.to_expr(var), s);
                        *seen += 1;
                    }
                    ("model", Value::String(s)) => {
                        assert_eq!(&parse_x_polynomial(s, k, var).unwrap().to_expr(var), s);
                        *seen += 1;
                    }
                    (key, Value::String(s)) if FUNCTION_KEYS.contains(&key) => {
                        let f = parse_field_element(s, k, var).unwrap();
                        assert_eq!(&f.to_expr(var), s, "{key}");
                        *seen += 1;
                    }
                    _ => round_trip(x, k, var, model, seen),
                }
            }
        }
        Value::Array(a) => a.iter().for_each(|x| round_trip(x, k, var, model, seen)),
        _ => {}
    }
}

#[test]
fn reported_functions_round_trip() {
    let cases = [
        ("legendre.toml", &["invariants", "find-pf", "exceptional-set"][..]),
        ("legendre-p2.toml", &["manin", "tangency"][..]),
        ("legendre-u.toml", &["manin"][..]),
        ("legendre-f5.toml", &["lambda", "mu", "nu", "descent-bound"][..]),
        ("charp.toml", &["invariants", "check-tau"][..]),
    ];
    for (file, cmds) in cases {
        for cmd in cmds {
            let (code, doc) = json(&[cmd], file);
            assert_eq!(code, 0, "{cmd} {file}");
            let inputs = &doc["inputs"];
            let var = inputs["variable"].as_str().unwrap();
            let k = match inputs["characteristic"].as_u64().unwrap() {
                0 => ConstantField::Rationals,
                p => ConstantField::prime(p).unwrap(),
            };
            let cubic = parse_x_polynomial(inputs["model"].as_str().unwrap(), k, var).unwrap();
            let model = WeierstrassModel::from_cubic(&cubic).unwrap();
            let mut seen = 0;
            round_trip(&doc["results"], k, var, &model, &mut seen);
            assert!(seen > 0, "{cmd} {file}");
        }
    }
}

#[test]
fn table_output() {
    let out = run(&["mu", "--table"], "legendre-f5.toml");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("mu\n"));
    assert!(text.contains("points.P.mu"));
    assert!(text.contains("ok   P: mu(pP) = 0"));
    let out = run(&["mu", "--table", "--json"], "legendre-f5.toml");
    assert_eq!(out.status.code(), Some(2));
}
