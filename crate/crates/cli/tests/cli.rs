//! End-to-end tests for the `algdl` binary: exit codes, report shape
//! against `schema/run-report.json`, and document round-trips.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn algdl(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_algdl"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf8 stderr"),
    }
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("algdl-cli-{}-{name}", std::process::id()));
    if dir.exists() {
        fs::remove_dir_all(&dir).expect("clear scratch dir");
    }
    fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

// ---------------------------------------------------------------------------
// Minimal JSON Schema checker (the subset the shipped schema uses:
// $ref into #/definitions, oneOf, enum, type, required, properties,
// additionalProperties, items).
// ---------------------------------------------------------------------------

fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let path = reference
        .strip_prefix("#/")
        .unwrap_or_else(|| panic!("unsupported $ref {reference:?}"));
    let mut node = root;
    for step in path.split('/') {
        node = node
            .get(step)
            .unwrap_or_else(|| panic!("dangling $ref {reference:?}"));
    }
    node
}

fn validate(value: &Value, schema: &Value, root: &Value) -> Result<(), String> {
    let rules = schema.as_object().expect("schema node is an object");
    if let Some(r) = rules.get("$ref") {
        return validate(value, resolve(root, r.as_str().expect("$ref string")), root);
    }
    if let Some(options) = rules.get("oneOf").and_then(Value::as_array) {
        let hits = options
            .iter()
            .filter(|s| validate(value, s, root).is_ok())
            .count();
        if hits != 1 {
            return Err(format!("oneOf matched {hits} branches for {value}"));
        }
        return Ok(());
    }
    if let Some(allowed) = rules.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{value} is not one of {allowed:?}"));
        }
    }
    if let Some(ty) = rules.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            other => panic!("schema uses unsupported type {other:?}"),
        };
        if !ok {
            return Err(format!("expected {ty}, got {value}"));
        }
    }
    if let Some(map) = value.as_object() {
        if let Some(required) = rules.get("required").and_then(Value::as_array) {
            for name in required {
                let name = name.as_str().expect("required name");
                if !map.contains_key(name) {
                    return Err(format!("missing required field {name:?}"));
                }
            }
        }
        let props = rules.get("properties").and_then(Value::as_object);
        for (key, field) in map {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => {
                    validate(field, sub, root).map_err(|e| format!("{key}: {e}"))?
                }
                None => match rules.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("unexpected field {key:?}"))
                    }
                    Some(sub) if sub.is_object() => {
                        validate(field, sub, root).map_err(|e| format!("{key}: {e}"))?
                    }
                    _ => {}
                },
            }
        }
    }
    if let (Some(list), Some(items)) = (value.as_array(), rules.get("items")) {
        for (i, item) in list.iter().enumerate() {
            validate(item, items, root).map_err(|e| format!("[{i}]: {e}"))?;
        }
    }
    Ok(())
}

fn parse_report(text: &str) -> Value {
    let report: Value = serde_json::from_str(text).expect("report is JSON");
    let schema: Value =
        serde_json::from_str(include_str!("../schema/run-report.json")).expect("schema parses");
    if let Err(e) = validate(&report, &schema, &schema) {
        panic!("report fails the schema: {e}");
    }
    report
}

fn results(report: &Value) -> &Vec<Value> {
    report["results"].as_array().expect("results array")
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

#[test]
fn catalog_prints_a_parseable_document() {
    let dir = scratch("catalog-stdout");
    let run = algdl(&dir, &["catalog", "b12"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(
        !run.stdout.starts_with('{'),
        "without --emit the document itself goes to stdout"
    );
    let alg = superalg::dsl::parse(&run.stdout).expect("document parses");
    assert_eq!(alg.dim(), 3);
    assert_eq!(alg.ring().characteristic(), 3);
}

#[test]
fn catalog_emit_writes_file_and_report() {
    let dir = scratch("catalog-emit");
    let run = algdl(&dir, &["catalog", "b42", "--emit", "b42.alg"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    assert!(report["input_digest"].is_string());
    let entry = &results(&report)[0];
    assert_eq!(entry["kind"], "catalog");
    assert_eq!(entry["family"], "b42");
    assert_eq!(entry["characteristic"], 3);
    assert_eq!(entry["dimension"], 6);
    assert_eq!(entry["emitted"], "b42.alg");
    let text = fs::read_to_string(dir.join("b42.alg")).expect("emitted file");
    let alg = superalg::dsl::parse(&text).expect("emitted document parses");
    assert_eq!(alg.dim(), 6);
    assert_eq!(alg.even_indices().len(), 4);
}

#[test]
fn catalog_rejects_unknown_family_and_bad_keys() {
    let dir = scratch("catalog-bad");
    let run = algdl(&dir, &["catalog", "no-such-family"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("no-such-family"), "stderr: {}", run.stderr);
    let run = algdl(&dir, &["catalog", "b12", "--size", "n=4"]);
    assert_eq!(run.code, 2);
    let run = algdl(&dir, &["catalog", "b12", "--size", "broken"]);
    assert_eq!(run.code, 2, "malformed KEY=N is a usage error");
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

#[test]
fn check_reports_a_passing_identity() {
    let dir = scratch("check-pass");
    assert_eq!(algdl(&dir, &["catalog", "b12", "--emit", "b12.alg"]).code, 0);
    let run = algdl(&dir, &["check", "b12.alg", "--identity", "alt-left"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    assert_eq!(report["exit"], 0);
    let entry = &results(&report)[0];
    assert_eq!(entry["kind"], "identity");
    assert_eq!(entry["identity"], "alt-left");
    assert_eq!(entry["tuples"], 27);
    assert_eq!(entry["holds"], true);
    assert!(entry.get("witness").is_none());
}

#[test]
fn check_failure_carries_a_witness_and_exit_one() {
    let dir = scratch("check-fail");
    assert_eq!(algdl(&dir, &["catalog", "b42", "--emit", "b42.alg"]).code, 0);
    let run = algdl(&dir, &["check", "b42.alg", "--identity", "assoc"]);
    assert_eq!(run.code, 1, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    assert_eq!(report["exit"], 1);
    let entry = &results(&report)[0];
    assert_eq!(entry["holds"], false);
    let witness = &entry["witness"];
    assert_eq!(witness["names"].as_array().expect("names").len(), 3);
    assert!(!witness["residual"].as_str().expect("residual").is_empty());
}

#[test]
fn check_rejects_unknown_identity_and_broken_documents() {
    let dir = scratch("check-bad");
    assert_eq!(algdl(&dir, &["catalog", "b12", "--emit", "b12.alg"]).code, 0);
    let run = algdl(&dir, &["check", "b12.alg", "--identity", "frobnicate"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("frobnicate"), "stderr: {}", run.stderr);

    fs::write(dir.join("broken.alg"), "basis a\nmul a a = b\n").expect("write");
    let run = algdl(&dir, &["check", "broken.alg", "--identity", "assoc"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("broken.alg"), "stderr: {}", run.stderr);
}

// ---------------------------------------------------------------------------
// center
// ---------------------------------------------------------------------------

#[test]
fn center_of_a_field_extension_is_the_unit_line() {
    let dir = scratch("center-b12");
    assert_eq!(algdl(&dir, &["catalog", "b12", "--emit", "b12.alg"]).code, 0);
    let run = algdl(&dir, &["center", "b12.alg"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    let entry = &results(&report)[0];
    assert_eq!(entry["kind"], "center");
    assert_eq!(entry["convention"], "plain");
    assert_eq!(entry["even"], serde_json::json!(["1"]));
    assert_eq!(entry["odd"], serde_json::json!([]));
    assert!(entry.get("specialization").is_none());
}

#[test]
fn center_requires_specialization_for_symbolic_parameters() {
    let dir = scratch("center-oct");
    assert_eq!(algdl(&dir, &["catalog", "octonion", "--emit", "oct.alg"]).code, 0);
    let run = algdl(&dir, &["center", "oct.alg"]);
    assert_eq!(run.code, 2, "symbolic parameters need --specialize");
    assert!(run.stderr.contains("specialize"), "stderr: {}", run.stderr);

    let run = algdl(&dir, &["center", "oct.alg", "--specialize", "2", "--seed", "3"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    let entry = &results(&report)[0];
    let spec = &entry["specialization"];
    assert_eq!(spec["prime"], 2);
    assert_eq!(spec["assignment"].as_object().expect("assignment").len(), 3);
    assert_eq!(entry["even"].as_array().expect("even").len(), 1);
    assert_eq!(entry["odd"].as_array().expect("odd").len(), 0);
}

// ---------------------------------------------------------------------------
// simple
// ---------------------------------------------------------------------------

#[test]
fn simple_confirms_a_simple_algebra() {
    let dir = scratch("simple-pass");
    assert_eq!(algdl(&dir, &["catalog", "b12", "--emit", "b12.alg"]).code, 0);
    let run = algdl(&dir, &["simple", "b12.alg", "--trials", "10", "--seed", "1"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    let entry = &results(&report)[0];
    assert_eq!(entry["kind"], "simplicity");
    assert_eq!(entry["verdict"], "simple");
    assert_eq!(entry["simple"], true);
    assert!(entry.get("ideal").is_none());
}

#[test]
fn simple_certifies_an_ideal_in_a_split_sum() {
    let dir = scratch("simple-fail");
    fs::write(
        dir.join("sum.alg"),
        "algebra split sum\nchar 0\nbasis a b\nmul a a = a\nmul b b = b\n",
    )
    .expect("write");
    let run = algdl(&dir, &["simple", "sum.alg", "--trials", "5", "--seed", "0"]);
    assert_eq!(run.code, 1, "stderr: {}", run.stderr);
    let report = parse_report(&run.stdout);
    let entry = &results(&report)[0];
    assert_eq!(entry["verdict"], "ideal-found");
    assert_eq!(entry["simple"], false);
    let ideal = &entry["ideal"];
    assert_eq!(ideal["dimension"], 1);
    assert_eq!(ideal["proper"], true);
}

// ---------------------------------------------------------------------------
// verify-proofs
// ---------------------------------------------------------------------------

#[test]
fn verify_proofs_single_case_writes_schema_valid_report() {
    let dir = scratch("verify-one");
    let run = algdl(
        &dir,
        &["verify-proofs", "--case", "alt-b12", "--field", "gf3", "--report", "r.json"],
    );
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("alt-b12"), "summary goes to stdout");
    let report = parse_report(&fs::read_to_string(dir.join("r.json")).expect("report file"));
    let entry = &results(&report)[0];
    assert_eq!(entry["kind"], "case");
    assert_eq!(entry["case"], "alt-b12");
    assert_eq!(entry["characteristic"], 3);
    assert_eq!(entry["settled"], true);
    assert_eq!(entry["open"], 0);
    assert_eq!(entry["records"].as_array().expect("records").len(), 3);
}

#[test]
fn verify_proofs_refuses_an_incompatible_field_for_a_named_case() {
    let dir = scratch("verify-bad-field");
    let run = algdl(&dir, &["verify-proofs", "--case", "alt-b12", "--field", "gf2"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("characteristic"), "stderr: {}", run.stderr);
}

#[test]
fn verify_proofs_batch_over_q_skips_modular_cases() {
    let dir = scratch("verify-batch");
    let run = algdl(&dir, &["verify-proofs", "--field", "q", "--report", "all.json"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let report = parse_report(&fs::read_to_string(dir.join("all.json")).expect("report file"));
    let entries = results(&report);
    let cases = entries.iter().filter(|e| e["kind"] == "case").count();
    let skipped = entries.iter().filter(|e| e["kind"] == "skipped").count();
    assert_eq!(cases, 11);
    assert_eq!(skipped, 7);
    for e in entries.iter().filter(|e| e["kind"] == "case") {
        assert_eq!(e["settled"], true, "case {} unsettled", e["case"]);
    }
}

// ---------------------------------------------------------------------------
// discrepancies
// ---------------------------------------------------------------------------

#[test]
fn discrepancies_report_is_deterministic_and_fully_resolved() {
    let first = scratch("disc-a");
    let second = scratch("disc-b");
    let run_a = algdl(&first, &["discrepancies", "--report", "d.json"]);
    let run_b = algdl(&second, &["discrepancies", "--report", "d.json"]);
    assert_eq!(run_a.code, 0, "stderr: {}", run_a.stderr);
    assert_eq!(run_b.code, 0);
    assert!(
        run_a.stdout.contains("settled by a correction"),
        "summary line goes to stdout"
    );
    let text_a = fs::read_to_string(first.join("d.json")).expect("first report");
    let text_b = fs::read_to_string(second.join("d.json")).expect("second report");
    assert_eq!(text_a, text_b, "same invocation, same bytes");
    let report = parse_report(&text_a);
    let entry = &results(&report)[0];
    assert_eq!(entry["kind"], "discrepancies");
    assert_eq!(entry["open"], 0);
    assert_eq!(entry["total"], entry["resolved"]);
    assert!(entry["total"].as_u64().expect("total") >= 40);
}

// ---------------------------------------------------------------------------
// usage errors
// ---------------------------------------------------------------------------

#[test]
fn usage_errors_exit_two() {
    let dir = scratch("usage");
    assert_eq!(algdl(&dir, &["frobnicate"]).code, 2, "unknown subcommand");
    assert_eq!(algdl(&dir, &["check", "x.alg"]).code, 2, "missing --identity");
    assert_eq!(
        algdl(&dir, &["check", "missing.alg", "--identity", "assoc"]).code,
        2,
        "missing input file"
    );
    assert_eq!(
        algdl(&dir, &["verify-proofs", "--case", "no-such", "--field", "q"]).code,
        2,
        "unknown case id"
    );
}
