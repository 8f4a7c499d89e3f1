//! Exit codes and `--json` golden reports of the binary on bundled fixtures.
//! Set `MLACALC_BLESS=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], fixture: &str) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mlacalc"))
        .args(args)
        .arg(manifest().join("fixtures").join(fixture))
        .env_remove("MLACALC_BUDGET_SECS")
        .output()
        .expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn golden(name: &str, args: &[&str], fixture: &str, code: i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let (got_code, stdout) = run(&full, fixture);
    assert_eq!(got_code, code, "{name}: exit code\n{stdout}");
    let parsed: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{name}: not JSON: {e}"));
    let path: &Path = &manifest().join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("MLACALC_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(path, &stdout).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{name}: {e}"));
    assert_eq!(stdout, expected, "{name}: JSON report drifted");
    // a second run is byte-identical
    assert_eq!(run(&full, fixture).1, stdout, "{name}: not deterministic");
    assert_eq!(parsed["status"], code_name(code));
}

fn code_name(code: i32) -> &'static str {
    match code {
        0 => "pass",
        1 => "violation",
        2 => "input-error",
        3 => "resource",
        _ => unreachable!(),
    }
}

#[test]
fn validate_improper_s3() {
    golden("validate-s3-improper", &["validate"], "algebras/s3-improper.json", 0);
    let (code, out) = run(&["validate"], "algebras/s3-improper.json");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "axioms: 5/5");
}

#[test]
fn validate_perturbed_star_reports_witness() {
    golden("validate-s3-perturbed", &["validate"], "perturbed/s3-improper.json", 1);
}

#[test]
fn validate_pair_with_perturbed_bracket() {
    golden("validate-s3-bracket", &["validate"], "perturbed/s3-bracket.json", 1);
}

#[test]
fn series_trivial_s3() {
    golden("series-s3-trivial", &["series"], "algebras/s3-trivial.json", 0);
    let (code, out) = run(&["series"], "algebras/s3-trivial.json");
    assert_eq!(code, 0);
    assert!(out.contains("Lie nilpotent: no (stabilizes at order 3); Lie solvable: yes, length 2"), "{out}");
}

#[test]
fn series_trivial_q8() {
    let (code, out) = run(&["series"], "algebras/q8-trivial.json");
    assert_eq!(code, 0);
    assert!(out.contains("Lie nilpotent: yes, class 2; Lie solvable: yes, length 2"), "{out}");
}

#[test]
fn action_check_s3_self_pair() {
    golden("action-check-s3-improper", &["action-check"], "pairs/s3-improper-self-pair.json", 0);
}

#[test]
fn action_check_needs_a_pair() {
    assert_eq!(run(&["action-check"], "algebras/s3-trivial.json").0, 2);
}

#[test]
fn tensor_z2_trivial_pair() {
    golden("tensor-z2-trivial", &["tensor"], "pairs/z2-trivial-pair.json", 0);
    let (_, out) = run(&["tensor", "--json"], "pairs/z2-trivial-pair.json");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["algebra"]["star"], "trivial");
}

#[test]
fn tensor_s3_improper_self_pair() {
    golden("tensor-s3-improper", &["tensor"], "pairs/s3-improper-self-pair.json", 0);
}

#[test]
fn tensor_result_reloads_as_an_algebra() {
    let (_, out) = run(&["tensor", "--json"], "tensor/q8-conjugation.json");
    let v: Value = serde_json::from_str(&out).unwrap();
    let doc = mlacalc_cli::document::InstanceDocument::from_value(v["algebra"].clone()).unwrap();
    let mlacalc_cli::document::InstanceDocument::Algebra(a) = doc else { panic!("not an algebra") };
    let m = a.load().unwrap();
    assert_eq!(m.order(), 64);
    assert_eq!(mlacalc_cli::document::AlgebraDoc::from_algebra(&m), a);
}

#[test]
fn tensor_cap_is_a_resource_outcome() {
    golden("tensor-q8-tiny-cap", &["tensor"], "tensor/q8-conjugation-tiny-cap.json", 3);
    assert_eq!(run(&["tensor", "--max-cosets", "8"], "pairs/q8-conjugation-pair.json").0, 3);
    assert_eq!(run(&["verify", "--suite", "tensor"], "tensor/q8-conjugation-tiny-cap.json").0, 3);
}

#[test]
fn flags_override_the_job() {
    assert_eq!(run(&["tensor", "--max-cosets", "200000"], "tensor/q8-conjugation-tiny-cap.json").0, 0);
}

#[test]
fn seed_order_alt_gives_the_same_order() {
    let (code, out) = run(&["tensor", "--json", "--seed-order", "alt"], "tensor/q8-conjugation.json");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 64);
    assert_eq!(v["seed_order"], "alt");
}

#[test]
fn verify_q8_trivial_self_pair() {
    golden("verify-q8-trivial-self-pair", &["verify"], "pairs/q8-trivial-self-pair.json", 0);
}

#[test]
fn verify_single_statement() {
    let (code, out) = run(&["verify", "--json", "--statement", "lie-identity-inverse"], "algebras/s3-improper.json");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), mlacalc::harness::CATALOGUE.len());
    let ran: Vec<_> = entries.iter().filter(|e| e["status"] != "skipped").collect();
    assert_eq!(ran.len(), 1);
    assert_eq!(ran[0]["id"], "lie-identity-inverse");
    assert_eq!(ran[0]["status"], "pass");
}

#[test]
fn verify_selection_mismatch_is_an_input_error() {
    assert_eq!(run(&["verify", "--statement", "square-quotient"], "algebras/s3-trivial.json").0, 2);
    assert_eq!(run(&["verify", "--statement", "no-such-statement"], "algebras/s3-trivial.json").0, 2);
}

#[test]
fn malformed_input_is_exit_two() {
    golden("validate-unknown-element", &["validate"], "invalid/unknown-element.json", 2);
    assert_eq!(run(&["validate"], "invalid/not-a-group.json").0, 2);
    assert_eq!(run(&["series"], "does-not-exist.json").0, 2);
    assert_eq!(run(&["tensor"], "algebras/s3-trivial.json").0, 2);
}

#[test]
fn every_bundled_algebra_validates() {
    let dir = manifest().join("fixtures/algebras");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let (code, out) = run(&["validate"], &format!("algebras/{name}"));
        assert_eq!(code, 0, "{name}: {out}");
        n += 1;
    }
    assert_eq!(n, 34);
}

#[test]
fn every_perturbed_fixture_is_a_violation() {
    let dir = manifest().join("fixtures/perturbed");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let (code, out) = run(&["validate"], &format!("perturbed/{name}"));
        assert_eq!(code, 1, "{name}: {out}");
        assert!(out.contains("fails at ("), "{name}: {out}");
    }
}
