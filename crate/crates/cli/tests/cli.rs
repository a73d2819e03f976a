//! End-to-end tests spawning the real binary: pinned documents for each
//! format, exit-status contracts, and round-trips through the JSON form.

use std::process::{Command, Output};

use equimatch::matchings::coefficient_via_matchings;
use equimatch_cli::output::parse_polynomial;

fn equimatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equimatch"))
        .args(args)
        .output()
        .expect("binary spawns")
}

/// Runs the binary, requiring exit 0, and returns stdout.
fn stdout_of(args: &[&str]) -> String {
    let out = equimatch(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Runs the binary, requiring a usage failure (exit 2, empty stdout).
fn usage_error_of(args: &[&str]) -> String {
    let out = equimatch(args);
    assert_eq!(
        out.status.code(),
        Some(2),
        "{args:?} should be a usage error; stdout: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
    String::from_utf8(out.stderr).expect("utf-8 output")
}

#[test]
fn coeff_text_and_latex_documents() {
    assert_eq!(
        stdout_of(&["coeff", "-i", "2", "-j", "3", "-k", "3"]),
        "beta_3^2 + 2*beta_2*beta_3 + beta_1*beta_3 + beta_2^2 + beta_1*beta_2\n"
    );
    assert_eq!(
        stdout_of(&["coeff", "-i", "2", "-j", "3", "-k", "3", "--format", "latex"]),
        "\\beta_3^2 + 2\\beta_2\\beta_3 + \\beta_1\\beta_3 + \\beta_2^2 + \\beta_1\\beta_2\n"
    );
    // Corner of the window: a single empty matching of weight 1.
    assert_eq!(stdout_of(&["coeff", "-i", "1", "-j", "1", "-k", "2"]), "1\n");
}

#[test]
fn coeff_json_document_is_pinned() {
    assert_eq!(
        stdout_of(&["coeff", "-i", "3", "-j", "3", "-k", "4", "--format", "json"]),
        include_str!("golden/coeff_3_3_4.json")
    );
}

#[test]
fn all_t_routes_print_the_same_document() {
    let reference = stdout_of(&[
        "coeff", "-i", "3", "-j", "2", "-k", "4", "--family", "t",
    ]);
    for route in ["explicit", "recurrence", "puzzles", "tableaux"] {
        assert_eq!(
            stdout_of(&["coeff", "-i", "3", "-j", "2", "-k", "4", "--route", route]),
            reference,
            "route {route}"
        );
    }
}

#[test]
fn out_of_window_and_out_of_ambient_coefficients_are_zero() {
    assert_eq!(stdout_of(&["coeff", "-i", "2", "-j", "3", "-k", "9"]), "0\n");
    assert_eq!(stdout_of(&["coeff", "-i", "2", "-j", "3", "-k", "2"]), "0\n");
    assert_eq!(
        stdout_of(&["coeff", "-i", "2", "-j", "2", "-k", "4", "-n", "3"]),
        "0\n"
    );
    assert_eq!(
        stdout_of(&["coeff", "-i", "2", "-j", "2", "-k", "4", "-n", "3", "--format", "json"]),
        "{\"family\":\"beta\",\"terms\":[]}\n"
    );
}

#[test]
fn expand_documents() {
    assert_eq!(
        stdout_of(&["expand", "-i", "1", "-j", "2", "-n", "4"]),
        "sigma_3 + (t_1 - t_3)*sigma_2\n"
    );
    // sigma_0 is the identity.
    assert_eq!(stdout_of(&["expand", "-i", "0", "-j", "2", "-n", "4"]), "sigma_2\n");
    // The ambient space cuts off sigma_4.
    assert_eq!(
        stdout_of(&["expand", "-i", "2", "-j", "2", "-n", "3"]),
        "(t_1 + t_2 - t_3 - t_4)*sigma_3 + (t_1*t_2 - t_1*t_3 - t_2*t_3 + t_3^2)*sigma_2\n"
    );
    assert_eq!(
        stdout_of(&["expand", "-i", "1", "-j", "2", "-n", "4", "--format", "latex"]),
        "\\sigma_3 + (t_1 - t_3)\\sigma_2\n"
    );
}

#[test]
fn expand_json_coefficients_parse_back_to_the_library_values() {
    let doc = stdout_of(&["expand", "-i", "2", "-j", "3", "-n", "5", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&doc).expect("valid json");
    assert_eq!(value["i"], 2);
    assert_eq!(value["j"], 3);
    assert_eq!(value["n"], 5);
    assert_eq!(value["family"], "t");
    let classes = value["classes"].as_array().expect("classes array");
    // Window [3, 5], printed from the top class down.
    let ks: Vec<u64> = classes.iter().map(|c| c["k"].as_u64().unwrap()).collect();
    assert_eq!(ks, vec![5, 4, 3]);
    for class in classes {
        let k = class["k"].as_u64().unwrap() as u32;
        let parsed =
            parse_polynomial(&class["coefficient"].to_string()).expect("coefficient parses");
        let expected = coefficient_via_matchings(2, 3, k).beta_to_t().unwrap();
        assert_eq!(parsed, expected, "coefficient of sigma_{k}");
    }
}

#[test]
fn polytope_documents() {
    assert_eq!(
        stdout_of(&["polytope", "-i", "2", "-j", "3", "-k", "3"]),
        "(0, 0, 2)\n(0, 1, 1)\n(0, 2, 0)\n(1, 0, 1)\n(1, 1, 0)\n"
    );
    assert_eq!(
        stdout_of(&["polytope", "-i", "3", "-j", "3", "-k", "4"]),
        include_str!("golden/polytope_3_3_4.txt")
    );
    // r = 0: the single vertex at the origin of R^k.
    assert_eq!(
        stdout_of(&["polytope", "-i", "2", "-j", "3", "-k", "5"]),
        "(0, 0, 0, 0, 0)\n"
    );
    assert_eq!(
        stdout_of(&["polytope", "-i", "2", "-j", "3", "-k", "3", "--format", "latex"]),
        "\\{(0,0,2), (0,1,1), (0,2,0), (1,0,1), (1,1,0)\\}\n"
    );
    assert_eq!(
        stdout_of(&["polytope", "-i", "2", "-j", "3", "-k", "3", "--format", "json"]),
        "{\"i\":2,\"j\":3,\"k\":3,\"points\":[[0,0,2],[0,1,1],[0,2,0],[1,0,1],[1,1,0]]}\n"
    );
}

#[test]
fn verify_reports_every_suite_on_a_tiny_grid() {
    let doc = stdout_of(&["verify", "--max-ij", "1"]);
    let lines: Vec<&str> = doc.lines().collect();
    let suites = [
        "equivalence",
        "symmetry",
        "snp",
        "scaling",
        "idp",
        "count",
        "associativity",
        "models",
    ];
    assert_eq!(lines.len(), suites.len() + 1);
    for (line, suite) in lines.iter().zip(suites) {
        assert!(
            line.starts_with(&format!("suite {suite}: ")) && line.contains("instances passed"),
            "unexpected report line: {line}"
        );
    }
    assert!(lines.last().unwrap().starts_with("all "));
    assert!(lines.last().unwrap().ends_with(" instances passed"));
}

#[test]
fn verify_json_report() {
    let doc = stdout_of(&["verify", "count", "--max-ij", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&doc).expect("valid json");
    assert_eq!(value["passed"], true);
    let reports = value["reports"].as_array().expect("reports array");
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["suite"], "count");
    assert_eq!(reports[0]["bounds"]["max_ij"], 2);
    assert_eq!(reports[0]["passed"], reports[0]["total"]);
    assert!(reports[0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_exit_status_is_zero_on_success() {
    let out = equimatch(&["verify", "symmetry", "--max-ij", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["coeff", "-i", "1", "-j", "1", "-k", "1", "--route", "explicit", "--family", "beta"][..],
        &["coeff", "-i", "4", "-j", "1", "-k", "4", "-n", "3"],
        &["coeff", "-i", "2", "-j", "3"],
        &["expand", "-i", "5", "-j", "1", "-n", "3"],
        &["expand", "-i", "1", "-j", "1"],
        &["polytope", "-i", "2", "-j", "3", "-k", "2"],
        &["polytope", "-i", "2", "-j", "3", "-k", "6"],
        &["verify", "nonsense"],
        &["verify", "count", "--format", "latex"],
    ] {
        let stderr = usage_error_of(args);
        assert!(!stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        &["coeff", "-i", "4", "-j", "4", "-k", "6", "--format", "json"][..],
        &["coeff", "-i", "5", "-j", "4", "-k", "6"],
        &["polytope", "-i", "3", "-j", "3", "-k", "4"],
        &["verify", "models", "--max-ij", "2"],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args), "{args:?} is not stable");
    }
}

#[test]
fn json_documents_round_trip_on_a_grid() {
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            for k in i.max(j)..=i + j {
                let doc = stdout_of(&[
                    "coeff",
                    "-i",
                    &i.to_string(),
                    "-j",
                    &j.to_string(),
                    "-k",
                    &k.to_string(),
                    "--format",
                    "json",
                ]);
                let parsed = parse_polynomial(doc.trim_end()).expect("document parses");
                assert_eq!(parsed, coefficient_via_matchings(i, j, k), "({i},{j},{k})");
            }
        }
    }
}
