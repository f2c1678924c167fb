use serde_json::Value;

use exact1q_web::{analyze, deutsch_jozsa, simulate};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("bindings return JSON")
}

#[test]
fn analyze_parity() {
    let v = parse(analyze("0110"));
    assert_eq!(v["classification"]["kind"], "parity_pair");
    assert_eq!(v["depth"], 2);
    assert_eq!(v["dependent_set"], serde_json::json!([1, 2]));
    assert_eq!(v["feasibility"]["feasible"], true);
    assert_eq!(v["feasibility"]["witness"], serde_json::json!(["1", "1"]));
}

#[test]
fn analyze_and_has_certificate() {
    let v = parse(analyze("0001"));
    assert_eq!(v["feasibility"]["feasible"], false);
    assert_eq!(
        v["feasibility"]["certificate"]["set_multipliers"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
}

#[test]
fn analyze_partial_and_constant() {
    let v = parse(analyze("0**1"));
    assert_eq!(v["total"], false);
    assert!(v.get("classification").is_none());
    let v = parse(analyze("1111"));
    assert!(v["feasibility"].is_null());
    assert_eq!(v["depth"], 0);
}

#[test]
fn simulate_is_exact() {
    let v = parse(simulate("1001"));
    assert_eq!(v["circuit"], true);
    assert_eq!(v["is_exact"], true);
    for row in v["inputs"].as_array().unwrap() {
        let want = if row["f"] == 1 { "1" } else { "0" };
        assert_eq!(row["p1"]["exact"], want);
    }
    let v = parse(simulate("00010111"));
    assert_eq!(v["circuit"], false);
}

#[test]
fn deutsch_jozsa_sizes() {
    let v = parse(deutsch_jozsa(4));
    assert_eq!(v["is_exact"], true);
    assert_eq!(v["queries"], 1);
    assert_eq!(v["table"], "0**1*11**11*1**0");
    assert!(parse(deutsch_jozsa(3)).get("error").is_some());
}

#[test]
fn errors_are_json() {
    for bad in ["01x", "011", "0110011001100110011001100110011001"] {
        assert!(parse(analyze(bad)).get("error").is_some(), "{bad}");
        assert!(parse(simulate(bad)).get("error").is_some(), "{bad}");
    }
    let big = "0".repeat(32);
    assert!(parse(analyze(&big)).get("error").is_some());
}
