use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qcat(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcat"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

const TWO_POINT: &str = r#"{"tnorm":"lukasiewicz","points":["p","q"],"matrix":[["1","1/2"],["1/4","1"]]}"#;

#[test]
fn lukasiewicz_witness_on_five_point_k() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcat(dir.path(), &["witness", "--tnorm", "lukasiewicz", "--k", "0,1/4,1/2,3/4,1", "-o", "w.json"]);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
    let w: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("w.json")).unwrap()).unwrap();
    assert_eq!(w["u"], "3/4");
    assert_eq!(w["v"], "3/4");
    assert_eq!(w["r"], "1/2");
    assert_eq!(w["lhs"], "1/2");
    assert_eq!(w["rhs"], "1/4");
    assert_eq!(w["d_fin"], "1/4");
    assert_eq!(w["lifted"]["points"].as_array().unwrap().len(), 6);
}

#[test]
fn remark4_witness_uses_descending_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcat(dir.path(), &["witness", "--tnorm", "remark4", "--k", "0,1/2,5/8,3/4,7/8,1"]);
    assert_eq!(code(&out), 1);
    let w = json_stdout(&out);
    assert_eq!((w["u"].as_str(), w["v"].as_str(), w["r"].as_str()), (Some("7/8"), Some("7/8"), Some("3/4")));
    assert_eq!(w["lhs"], "3/4");
    assert_eq!(w["rhs"], "5/8");
}

#[test]
fn godel_on_unit_interval_is_cartesian_closed() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcat(dir.path(), &["witness", "--tnorm", "godel", "--k", "unit"]);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    assert_eq!(v["cartesian_closed"], true);
    assert_eq!(v["criterion"], true);
}

#[test]
fn witness_needs_both_flags() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&qcat(dir.path(), &["witness", "--tnorm", "godel"])), 2);
    assert_eq!(code(&qcat(dir.path(), &["witness", "--k", "unit"])), 2);
}

#[test]
fn verify_ccc_equivalence_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcat(dir.path(), &["verify", "ccc_equivalence"]);
    assert_eq!(code(&out), 0);
    let report = json_stdout(&out);
    assert_eq!(report["suite"], "ccc_equivalence");
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["summary"]["error"], 0);
    assert!(report["summary"]["pass"].as_u64().unwrap() > 0);
}

#[test]
fn verify_output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = qcat(dir.path(), &["verify", "monoidal", "--seed", "7"]);
    let b = qcat(dir.path(), &["verify", "monoidal", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_suite_is_an_operational_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&qcat(dir.path(), &["verify", "nonesuch"])), 2);
}

#[test]
fn constructed_category_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.json"), TWO_POINT).unwrap();
    for kind in ["product", "tensor", "hom_power", "hom_tensor"] {
        let out = qcat(dir.path(), &["construct", kind, "a.json", "a.json", "-o", "c.json"]);
        assert_eq!(code(&out), 0, "{kind}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(code(&qcat(dir.path(), &["validate", "c.json"])), 0, "{kind} result is a category");
        // a single identity leg re-emits the category unchanged
        let c: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
        let points: Vec<&str> = c["points"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
        let map: serde_json::Map<String, Value> = points.iter().map(|p| (p.to_string(), Value::from(*p))).collect();
        let lift = serde_json::json!({ "tnorm": "lukasiewicz", "carrier": points, "legs": [{ "category": "c.json", "map": map }] });
        fs::write(dir.path().join("lift.json"), lift.to_string()).unwrap();
        let again = json_stdout(&qcat(dir.path(), &["construct", "final_lift", "lift.json"]));
        assert_eq!(again, c, "{kind}");
    }
}

#[test]
fn product_matrix_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.json"), TWO_POINT).unwrap();
    let out = qcat(dir.path(), &["construct", "product", "a.json", "a.json"]);
    let v = json_stdout(&out);
    assert_eq!(v["points"].as_array().unwrap().len(), 4);
    // (p,p) to (q,q) is 1/2 ∧ 1/2
    assert_eq!(v["matrix"][0][3], "1/2");
    // (q,q) to (p,p) is 1/4
    assert_eq!(v["matrix"][3][0], "1/4");
}

#[test]
fn coreflect_and_reflect_bracket_the_input() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.json"), TWO_POINT).unwrap();
    fs::write(dir.path().join("s.json"), r#"{"variant":"k_diagonal","k":{"components":[{"lo":"0","hi":"0"},{"lo":"1/2","hi":"1/2"},{"lo":"1","hi":"1"}]}}"#).unwrap();
    let lo = json_stdout(&qcat(dir.path(), &["construct", "coreflect", "s.json", "a.json"]));
    let hi = json_stdout(&qcat(dir.path(), &["construct", "reflect", "s.json", "a.json"]));
    // K_Δ forces symmetric values in K: (1/2,1/4) drops to (0,0) and rises to (1/2,1/2)
    assert_eq!(lo["matrix"][0][1], "0/1");
    assert_eq!(lo["matrix"][1][0], "0/1");
    assert_eq!(hi["matrix"][0][1], "1/2");
    assert_eq!(hi["matrix"][1][0], "1/2");
}

#[test]
fn final_lift_from_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.json"), TWO_POINT).unwrap();
    fs::write(
        dir.path().join("lift.json"),
        r#"{"tnorm":"lukasiewicz","carrier":["u","v","w"],"legs":[{"category":"a.json","map":{"p":"u","q":"v"}},{"category":"a.json","map":{"p":"v","q":"w"}}]}"#,
    )
    .unwrap();
    let v = json_stdout(&qcat(dir.path(), &["construct", "final_lift", "lift.json"]));
    // u to w passes through v: 1/2 & 1/2 = 0 under Łukasiewicz
    assert_eq!(v["matrix"][0][1], "1/2");
    assert_eq!(v["matrix"][0][2], "0/1");
    assert_eq!(v["matrix"][2][0], "0/1");
}

#[test]
fn validate_reports_broken_category() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("bad.json"),
        r#"{"tnorm":"product","points":["a","b","c"],"matrix":[["1","1/2","0"],["1","1","1/2"],["1","1","1"]]}"#,
    )
    .unwrap();
    let out = qcat(dir.path(), &["validate", "bad.json"]);
    assert_eq!(code(&out), 1);
    let r = json_stdout(&out);
    assert_eq!(r["cases"][0]["status"], "fail");
    assert_eq!(r["cases"][0]["witness"]["axiom"], "transitivity");
}

#[test]
fn validate_suitable_and_interval_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("s.json"), r#"{"variant":"k_square","k":{"components":[{"lo":"0","hi":"0"},{"lo":"1/2","hi":"1/2"},{"lo":"1","hi":"1"}]}}"#).unwrap();
    fs::write(
        dir.path().join("k.json"),
        r#"{"components":[{"lo":"0","hi":"1/4"},{"lo":"1","hi":"1"}]}"#,
    )
    .unwrap();
    let out = qcat(dir.path(), &["validate", "s.json", "--grid-denominator", "20"]);
    assert_eq!(code(&out), 0);
    // [0,1/4] ∪ {1} is closed under Łukasiewicz
    let out = qcat(dir.path(), &["validate", "k.json"]);
    assert_eq!(code(&out), 0);
    let out = qcat(dir.path(), &["validate", "k.json", "--tnorm", "remark4"]);
    assert!(code(&out) <= 1);
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("x.json"), "not json").unwrap();
    fs::write(
        dir.path().join("big.json"),
        r#"{"tnorm":"godel","points":["p"],"matrix":[["3/2"]]}"#,
    )
    .unwrap();
    assert_eq!(code(&qcat(dir.path(), &["validate", "x.json"])), 2);
    assert_eq!(code(&qcat(dir.path(), &["validate", "big.json"])), 2);
    assert_eq!(code(&qcat(dir.path(), &["validate", "missing.json"])), 2);
    assert_eq!(code(&qcat(dir.path(), &["construct", "product", "x.json"])), 2);
    assert_eq!(code(&qcat(dir.path(), &["witness", "--tnorm", "nosuch", "--k", "unit"])), 2);
}

#[test]
fn size_cap_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.json"), TWO_POINT).unwrap();
    let out = qcat(dir.path(), &["construct", "hom_power", "a.json", "a.json", "--max-maps", "2"]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn text_format_renders_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcat(dir.path(), &["verify", "approx", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite approx:"));
    assert!(text.contains("PASS"));
}
