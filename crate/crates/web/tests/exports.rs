use invstab_web::{generate_json, stability_map_json, trace_table_json};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.expect("call succeeds")).unwrap()
}

#[test]
fn trace_table_over_f9() {
    let v = parse(trace_table_json(3, 2, "2,2,1", "0,1", 8));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let traces: Vec<&str> = rows.iter().map(|r| r["trace"].as_str().unwrap()).collect();
    assert_eq!(traces, ["1", "1", "2", "2", "1", "2", "2", "1"]);
    assert_eq!(v["field"]["descriptor"], "F_3^2[2,2,1]");
}

#[test]
fn stability_map_over_f9() {
    let v = parse(stability_map_json(3, 2, "2,2,1"));
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 9);
    assert_eq!(v["stable"], 6);
    for c in cells {
        let trace_zero = c["trace"] == "0";
        assert_eq!(c["outcome"] == "unstable", trace_zero, "{c}");
    }
    let w = cells.iter().find(|c| c["xi"] == "0,1").unwrap();
    assert_eq!(w["period"], 3);
}

#[test]
fn stability_map_empty_modulus_means_default() {
    let a = stability_map_json(2, 3, "").unwrap();
    let b = stability_map_json(2, 3, " ").unwrap();
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 8);
}

#[test]
fn generate_checks_both_ways() {
    let v = parse(generate_json(3, 2, "2,2,1", "0,1", 2));
    assert_eq!(v["degree"], 9);
    assert_eq!(v["criterion_irreducible"], true);
    assert_eq!(v["rabin_irreducible"], true);
    let v = parse(generate_json(5, 2, "2,4,1", "0,1", 2));
    assert_eq!(v["degree"], 25);
    assert_eq!(v["criterion_irreducible"], v["rabin_irreducible"]);
}

#[test]
fn errors_are_messages() {
    assert!(trace_table_json(4, 1, "", "1", 3)
        .unwrap_err()
        .contains("prime"));
    assert!(stability_map_json(5, 6, "")
        .unwrap_err()
        .contains("limited"));
    assert!(generate_json(5, 1, "", "1", 9).is_err());
    assert!(generate_json(3, 1, "", "1", 0).is_err());
    assert!(trace_table_json(3, 2, "2,2,1", "x", 3).is_err());
}
