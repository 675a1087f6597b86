use std::process::{Command, Output};

use serde_json::Value;
use wigner_cli::export::parse_matrix;
use wigner_core::scalar::{deformed_number, NuPolynomial, RadicalSum};
use wigner_core::spin::build_js_spin_rep;

fn wigner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wigner"))
        .args(args)
        .env_remove("WIGNER_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn spin_rep_exports_exact_spin_one_matrices() {
    let out = wigner(&["spin-rep", "--two-j", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    let rep = build_js_spin_rep(2).unwrap();
    let jp = parse_matrix(&doc["operators"]["J+"]).unwrap();
    assert_eq!(jp, rep.j_plus);
    assert_eq!(parse_matrix(&doc["operators"]["R_J"]).unwrap(), rep.r_j);
    let entry = &doc["operators"]["J+"]["entries"][0];
    assert_eq!(entry["display"], "√(2 + 4ν)");
    assert_eq!(entry["terms"][0]["radicand"].to_string(), "[[2,1],[4,1]]");
    assert_eq!(entry["terms"][0]["coeff"].to_string(), r#"{"im":[0,1],"re":[1,1]}"#);
}

#[test]
fn every_exported_operator_round_trips() {
    for args in [
        vec!["single-mode", "--dim", "5"],
        vec!["two-mode", "--dims", "3", "2"],
        vec!["spin-rep", "--two-j", "3"],
        vec!["hp-rep", "--two-j", "4"],
        vec!["so3-rep", "--two-j", "2"],
    ] {
        let out = wigner(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let doc = json_of(&out);
        for (name, m) in doc["operators"].as_object().unwrap() {
            let parsed = parse_matrix(m).unwrap();
            let again = wigner_cli::export::matrix_json(&parsed);
            assert_eq!(&again, m, "{args:?} {name}");
        }
    }
}

#[test]
fn numbers_lists_deformed_numbers() {
    let doc = json_of(&wigner(&["numbers", "--max-n", "10"]));
    let rows = doc["deformed_numbers"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let display: Vec<&str> = rows.iter().map(|r| r["display"].as_str().unwrap()).collect();
    assert_eq!(
        display,
        ["0", "1 + 2ν", "2", "3 + 2ν", "4", "5 + 2ν", "6", "7 + 2ν", "8", "9 + 2ν", "10"]
    );
    assert_eq!(rows[3]["coeffs"].to_string(), "[[3,1],[2,1]]");
    for (n, r) in rows.iter().enumerate() {
        let expected = RadicalSum::from(deformed_number(n as u64));
        let coeffs = wigner_cli::export::real_poly_json(&deformed_number(n as u64));
        assert_eq!(r["coeffs"], coeffs, "{expected}");
    }
}

#[test]
fn csv_needs_exactly_one_nu() {
    assert_eq!(wigner(&["numbers", "--format", "csv"]).status.code(), Some(2));
    let out = wigner(&["numbers", "--max-n", "3", "--format", "csv", "--nu", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,value\n0,0.0000000000000000e0\n1,2.0000000000000000e0\n2,2.0000000000000000e0\n3,4.0000000000000000e0\n"
    );
}

#[test]
fn csv_matrix_entries_are_numeric() {
    let out = wigner(&["spin-rep", "--two-j", "1", "--format", "csv", "--nu", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("operator,row,col,re,im"));
    assert_eq!(lines.next(), Some("J+,0,1,2.0000000000000000e0,0.0000000000000000e0"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["spin-rep"],
        vec!["spin-rep", "--two-j", "x"],
        vec!["numbers", "--nu", "-0.6"],
        vec!["realizations", "--format", "csv", "--nu", "1"],
        vec!["frobnicate"],
    ] {
        let out = wigner(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn odd_holstein_primakoff_is_refused_with_leakage() {
    let out = wigner(&["hp-rep", "--two-j", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json_of(&out);
    assert_eq!(doc["error"]["kind"], "odd_two_j_not_closed");
    assert_eq!(doc["error"]["leakage"]["display"], "2√(ν)");
    let leakage = wigner_cli::export::parse_radical(&doc["error"]["leakage"]["terms"]).unwrap();
    let two_nu = NuPolynomial::from_ints(&[0, 2]);
    assert_eq!(leakage, RadicalSum::sqrt(&(&two_nu * &deformed_number(2))).unwrap());
}

#[test]
fn output_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_wigner"))
        .args(["spin-rep", "--two-j", "1", "--output", "nested/j_half.json"])
        .env("WIGNER_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(dir.path().join("nested/j_half.json")).unwrap();
    let doc: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(doc["two_j"], 1);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = wigner(&["so3-rep", "--two-j", "3"]).stdout;
    let b = wigner(&["so3-rep", "--two-j", "3"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn strict_mode_fails_on_caveats() {
    assert_eq!(wigner(&["so3-rep", "--two-j", "1"]).status.code(), Some(0));
    assert_eq!(wigner(&["so3-rep", "--two-j", "1", "--strict"]).status.code(), Some(1));
    assert_eq!(wigner(&["spin-rep", "--two-j", "2", "--strict"]).status.code(), Some(0));
}

#[test]
fn errata_prints_printed_and_computed_forms() {
    let out = wigner(&["errata", "--max-two-j", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    let ids: Vec<&str> = doc["findings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["id"].as_str().unwrap())
        .collect();
    assert_eq!(
        ids,
        [
            "odd_condensed_coefficient",
            "pauli_bracket",
            "quadratic_algebra",
            "reflection_identification",
            "so3_bracket",
            "so3_odd_condensed",
            "so3_even_condensed"
        ]
    );
    let pauli = &doc["findings"][1];
    assert_eq!(pauli["confirmed"], true);
    assert_eq!(pauli["cases"][0]["printed"]["witness"]["actual"], "1 + 4ν + 4ν^2");
}

#[test]
fn small_verify_passes() {
    let out = wigner(&["verify", "--max-two-j", "3", "--dims", "4", "4", "--max-n", "6", "--max-dim", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["summary"]["fail"], 0);
    assert_eq!(doc["exit_code"], 0);
    let names: Vec<&str> = doc["sections"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names.len(), 11);
}
