use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn hochcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochcalc"))
        .args(args)
        .env_remove("HOCHCALC_GB_CAP")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// The whole of stdout must be a single JSON document.
fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hochcalc-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn info_lambda3p() {
    let out = hochcalc(&["info", "--catalog", "lambda3p", "--field", "GF(3)", "--param", "lambda=2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dim         12"), "{text}");
    assert!(text.contains("[[4,2],[2,4]]"), "{text}");
    assert!(text.contains("symmetric   Certified"), "{text}");

    let v = json(&hochcalc(&["info", "--catalog", "lambda3p", "--field", "GF(3)", "--param", "lambda=2", "--json"]));
    assert_eq!(v["dim"], 12);
    assert_eq!(v["cartan"], serde_json::json!([[4, 2], [2, 4]]));
    assert_eq!(v["center_dim"], 6);
    assert_eq!(v["nakayama"], serde_json::json!(["1", "2"]));
}

#[test]
fn info_lambda10_nakayama_moves_vertices() {
    let v = json(&hochcalc(&["info", "--catalog", "lambda10", "--field", "GF(2)", "--json"]));
    let perm: Vec<&str> = v["nakayama"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    let labels: Vec<String> = (1..=perm.len()).map(|i| i.to_string()).collect();
    assert_ne!(perm, labels);
    assert_eq!(v["symmetric"]["verdict"], "RefutedByNakayama");
}

#[test]
fn malformed_file_reports_position() {
    let dir = scratch("malformed");
    let path = dir.join("bad.qa");
    std::fs::write(&path, "algebra bad\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  a*a = a*a $\n").unwrap();
    let out = hochcalc(&["info", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("line 5, column"), "{err}");
}

#[test]
fn unknown_sources_and_fields_are_parse_errors() {
    assert_eq!(code(&hochcalc(&["info", "--catalog", "lambda11"])), 2);
    assert_eq!(code(&hochcalc(&["info", "--catalog", "lambda1", "--field", "GF(6)"])), 2);
    assert_eq!(code(&hochcalc(&["hh", "--catalog", "lambda1", "--method", "spectral"])), 2);
    assert_eq!(code(&hochcalc(&["hh", "--catalog", "lambda3p", "--field", "GF(3)", "--param", "lambda"])), 2);
}

#[test]
fn infinite_dimensional_file_is_a_build_failure() {
    let dir = scratch("build");
    let path = dir.join("loop.qa");
    std::fs::write(&path, "algebra loop\nvertices: 1\narrow a: 1 -> 1\n").unwrap();
    let out = hochcalc(&["info", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));
}

#[test]
fn hh_values() {
    let v = json(&hochcalc(&["hh", "--catalog", "lambda9p", "--field", "Q", "--json"]));
    assert_eq!(v["hh"], serde_json::json!([5, 1, 0]));
    let v = json(&hochcalc(&["hh", "--catalog", "lambda1", "--field", "GF(3)", "--json"]));
    assert_eq!(v["hh"], serde_json::json!([5, 3, 3]));
}

#[test]
fn hh_with_oracle_json_schema() {
    let out = hochcalc(&["hh", "--catalog", "lambda3p", "--field", "GF(4)", "--param", "lambda=g", "--oracle", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["hh"], serde_json::json!([6, 6, 6]));
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["oracle"]["report"]["hh"], serde_json::json!([6, 6, 6]));
    assert_eq!(v["params"]["lambda"], "g");
    assert_eq!(v["field"], "GF(4)");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    for k in ["algebra", "field", "params", "dim", "cartan", "center_dim", "hh", "intermediates", "oracle", "timing_ms"] {
        assert!(keys.iter().any(|x| *x == k), "missing {k}");
    }
    let text = stdout(&out);
    let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\":")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "keys are not emitted in sorted order");
    let round: Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(round, v);
}

#[test]
fn bar_method_matches_resolution() {
    let a = json(&hochcalc(&["hh", "--catalog", "lambda9", "--field", "GF(2)", "--json"]));
    let b = json(&hochcalc(&["hh", "--catalog", "lambda9", "--field", "GF(2)", "--method", "bar", "--json"]));
    assert_eq!(a["hh"], serde_json::json!([5, 1, 2]));
    assert_eq!(a["hh"], b["hh"]);
}

#[test]
fn compare_pairs() {
    let v = json(&hochcalc(&["compare", "lambda3", "lambda3p", "--field", "GF(4)", "--json"]));
    let rel: Vec<&str> = v["comparison"].as_array().unwrap().iter().map(|r| r["relation"].as_str().unwrap()).collect();
    assert_eq!(rel, ["=", "<", "<"]);
    assert_eq!(v["a"]["hh"], serde_json::json!([6, 4, 4]));
    assert_eq!(v["b"]["hh"], serde_json::json!([6, 6, 6]));

    let v = json(&hochcalc(&["compare", "lambda9", "lambda9p", "--field", "GF(2)", "--json"]));
    assert_eq!(v["a"]["hh"], serde_json::json!([5, 1, 2]));
    assert_eq!(v["b"]["hh"], serde_json::json!([5, 2, 3]));

    let out = hochcalc(&["compare", "lambda6", "lambda6", "--field", "GF(2)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).matches(" = ").count(), 3);
}

#[test]
fn compare_reports_each_failing_side() {
    let dir = scratch("compare");
    let path = dir.join("loop.qa");
    std::fs::write(&path, "algebra loop\nvertices: 1\narrow a: 1 -> 1\n").unwrap();
    let out = hochcalc(&["compare", "lambda6", path.to_str().unwrap(), "--field", "GF(2)"]);
    assert_eq!(code(&out), 3);
    let err = stderr(&out);
    assert!(err.contains("lambda6: ok"), "{err}");
    assert!(err.contains("loop.qa:"), "{err}");
}

#[test]
fn verify_named_entry() {
    let out = hochcalc(&["verify", "lambda6", "lambda6p"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("pass  lambda6    GF(2)    (5, 2, 2)"), "{text}");
    assert!(text.contains("pass  lambda6p   GF(2)    (5, 3, 3)"), "{text}");
    assert!(text.contains("pass  lambda6p   GF(3)    (5, 2, 2)"), "{text}");
}

#[test]
fn verify_all_passes() {
    let out = hochcalc(&["verify", "--all", "--json"]);
    let v = json(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 52);
    let failing: Vec<String> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| format!("{}@{}: {}", r["entry"], r["field"], r["problems"]))
        .collect();
    assert!(failing.is_empty(), "{failing:#?}");
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_against_corrupted_fixture() {
    let dir = scratch("fixture");
    assert_eq!(code(&hochcalc(&["catalog", "export", dir.to_str().unwrap()])), 0);
    let path = dir.join("expectations.json");
    let mut table: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    table["lambda9p"]["expectations"]["other"]["hh"][1] = 7.into();
    std::fs::write(&path, table.to_string()).unwrap();
    let out = hochcalc(&["verify", "lambda9p", "lambda9", "--expectations", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL  lambda9p   Q"), "{text}");
    assert!(text.contains("HH^1: expected 7, computed 1"), "{text}");
    assert!(text.contains("pass  lambda9    GF(2)"), "{text}");
    assert!(stderr(&out).contains("lambda9p@Q"));
}

#[test]
fn verify_with_oracle() {
    let out = hochcalc(&["verify", "lambda3", "lambda1p", "--oracle"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn resolution_terms() {
    let v = json(&hochcalc(&["resolution", "--catalog", "lambda3p", "--field", "GF(3)", "--terms", "4", "--json"]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert_eq!(terms[4]["dim_omega"], 12);
    assert_eq!(v["stopped"], Value::Null);

    let v = json(&hochcalc(&["resolution", "--catalog", "lambda9p", "--field", "Q", "--terms", "3", "--json"]));
    assert_eq!(v["terms"][3]["dim_omega"], 28);
}

#[test]
fn resolution_of_semisimple_algebra_stops_at_degree_one() {
    let dir = scratch("semisimple");
    let path = dir.join("kk.qa");
    std::fs::write(&path, "algebra kk\nvertices: 1, 2\n").unwrap();
    let v = json(&hochcalc(&["resolution", path.to_str().unwrap(), "--json"]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[1]["dim_omega"], 0);
}

#[test]
fn resolution_guards_keep_partial_output() {
    let out = hochcalc(&["resolution", "--catalog", "lambda3p", "--field", "GF(3)", "--memory-guard", "100", "--json"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert!(v["stopped"].as_str().unwrap().contains("memory guard"));

    let out = hochcalc(&["resolution", "--catalog", "lambda3p", "--field", "GF(3)", "--terms", "7"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn shipped_catalog_matches_export() {
    let dir = scratch("export");
    assert_eq!(code(&hochcalc(&["catalog", "export", dir.to_str().unwrap()])), 0);
    let shipped = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/catalog");
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 23);
    for n in names {
        let exported = std::fs::read_to_string(dir.join(&n)).unwrap();
        let ours = std::fs::read_to_string(shipped.join(&n)).unwrap_or_else(|_| panic!("{n} not shipped"));
        assert_eq!(exported, ours, "{n}");
    }
}

#[test]
fn shipped_files_build_like_the_catalog() {
    let shipped = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/catalog/lambda1.qa");
    let v = json(&hochcalc(&["hh", shipped.to_str().unwrap(), "--field", "GF(3)", "--json"]));
    assert_eq!(v["hh"], serde_json::json!([5, 3, 3]));
}

#[test]
fn catalog_and_methods_listings() {
    let out = hochcalc(&["catalog", "list"]);
    assert_eq!(stdout(&out).lines().count(), 22);
    let out = hochcalc(&["catalog", "show", "lambda1p"]);
    assert!(stdout(&out).starts_with("algebra lambda1p\n"));
    let out = hochcalc(&["methods"]);
    let text = stdout(&out);
    let names: Vec<&str> = text.lines().filter_map(|l| l.split_whitespace().next()).collect();
    assert_eq!(names, ["bar", "resolution"]);
}
