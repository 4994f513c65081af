//! End-to-end tests through the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use yhw_core::rat::Rat;
use yhw_core::{MonicPoly, RationalFn};

fn yhw(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_yhw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn yhw");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait for yhw")
}

fn json(output: &Output) -> serde_json::Value {
    assert!(
        !output.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("report is json")
}

#[test]
fn decide_gl11_is_always_finite() {
    let out = yhw(
        &["decide"],
        r#"{"parity":"01","weights":[{"roots":["2"]},{"roots":["5"]}],"command":"decide"}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["result"]["verdict"], "finite_dimensional");
}

#[test]
fn decide_standard_sequence_failure_position() {
    let out = yhw(
        &["decide"],
        r#"{"parity":"0011","weights":[{"roots":["0"]},{"roots":["1"]},{"roots":["0"]},{"roots":["0"]}]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["result"]["verdict"], "infinite_dimensional");
    assert_eq!(
        report["result"]["decision"]["certificate"]["infinite"]["position"],
        1
    );
}

#[test]
fn decide_with_reflection_trail_and_valid_certificate() {
    let out = yhw(
        &["decide"],
        r#"{"parity":"101","weights":[{"roots":["2"]},{"roots":["5"]},{"roots":["7"]}]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let result = &report["result"];
    assert_eq!(result["verdict"], "finite_dimensional");
    let trail = result["decision"]["trail"].as_array().unwrap();
    assert_eq!(trail.len(), 1);
    assert_eq!(trail[0]["index"], 1);
    assert_eq!(trail[0]["direction"], "plus");

    // Re-validate the certificate from the report alone: P(u+1)/P(u) must
    // reduce to the ratio of the standard components at each index.
    let standard: Vec<MonicPoly> = result["decision"]["standard_weight"]["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(roots_of)
        .collect();
    let p2 = roots_of(&result["decision"]["certificate"]["finite"]["p"]["2"]);
    let lhs = RationalFn::reduce(p2.shift(&Rat::one()), p2);
    let rhs = RationalFn::reduce(standard[2].clone(), standard[1].clone());
    assert_eq!(lhs, rhs);
}

fn roots_of(value: &serde_json::Value) -> MonicPoly {
    MonicPoly::from_root_values(
        value
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().parse().unwrap())
            .collect(),
    )
}

#[test]
fn decide_accepts_coefficient_form_and_reports_the_twist() {
    let out = yhw(
        &["decide"],
        r#"{"parity":"01","weights":[{"num_coeffs":["1","1"],"den_coeffs":["1","2"]},{"num_coeffs":["1"]}]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["result"]["twist"][1], "2");
    assert_eq!(report["result"]["verdict"], "finite_dimensional");
}

#[test]
fn reflect_twice_is_the_identity() {
    let job =
        r#"{"parity":"101","weights":[{"roots":["2"]},{"roots":["5"]},{"roots":["7"]}],"index":1}"#;
    let out = yhw(&["reflect"], job);
    assert_eq!(out.status.code(), Some(0));
    let first = json(&out);
    assert_eq!(first["result"]["parity_out"], "011");
    let weight_out = &first["result"]["weight_out"]["components"];
    assert_eq!(weight_out[0][0], "6");
    assert_eq!(weight_out[1][0], "3");

    let back = serde_json::json!({
        "parity": first["result"]["parity_out"],
        "weights": [
            {"roots": weight_out[0]},
            {"roots": weight_out[1]},
            {"roots": weight_out[2]},
        ],
        "index": 1,
    });
    let out = yhw(&["reflect"], &back.to_string());
    assert_eq!(out.status.code(), Some(0));
    let second = json(&out);
    assert_eq!(second["result"]["parity_out"], "101");
    let restored = &second["result"]["weight_out"]["components"];
    assert_eq!(restored[0][0], "2");
    assert_eq!(restored[1][0], "5");
    assert_eq!(restored[2][0], "7");
}

#[test]
fn reflect_rejects_equal_parities() {
    let out = yhw(
        &["reflect"],
        r#"{"parity":"001","weights":[{"roots":["1"]},{"roots":["2"]},{"roots":["3"]}],"index":1}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chain_lists_descents_in_order() {
    let out = yhw(&["chain"], r#"{"parity":"110"}"#);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["result"]["indices"], serde_json::json!([2, 1]));
    assert_eq!(report["result"]["standard_parity"], "011");
}

#[test]
fn chain_carries_the_weight_when_given() {
    let out = yhw(
        &["chain"],
        r#"{"parity":"10","weights":[{"roots":["2"]},{"roots":["5"]}]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["result"]["weight_out"]["components"][0][0], "6");
    assert_eq!(report["result"]["weight_out"]["components"][1][0], "3");
}

#[test]
fn verify_families_pass_and_record_seeds() {
    for (family, extra) in [
        ("rtt", r#","parity":"101","factors":2"#),
        ("prop42", r#","level":2"#),
        ("reflection", r#","parity":"101","level":2"#),
        ("berezinian", r#","level":1"#),
    ] {
        let job = format!(r#"{{"family":"{}","count":2,"seed":11{}}}"#, family, extra);
        let out = yhw(&["verify"], &job);
        assert_eq!(
            out.status.code(),
            Some(0),
            "family {}: {}",
            family,
            String::from_utf8_lossy(&out.stderr)
        );
        let report = json(&out);
        assert_eq!(report["result"]["passes"], 2);
        assert_eq!(report["result"]["failures"], 0);
        assert_eq!(report["result"]["instances"][0]["seed"], 11);
        assert_eq!(report["result"]["instances"][1]["seed"], 12);
    }
}

#[test]
fn verify_reports_are_deterministic_up_to_timing() {
    let job = r#"{"family":"prop42","level":2,"count":3,"seed":5}"#;
    let a = yhw(&["verify"], job);
    let b = yhw(&["verify"], job);
    let strip = |o: &Output| {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .filter(|l| !l.contains("timing_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn berezinian_reports_the_component_ratio() {
    let out = yhw(
        &["berezinian"],
        r#"{"parity":"01","weights":[{"roots":["2"]},{"roots":["5"]}]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let result = &report["result"];
    assert_eq!(result["central"], true);
    assert_eq!(result["scalar_match"], true);
    assert_eq!(result["order"], 4);
    // (1+5x)/(1+2x) = 1 + 3x - 6x^2 + 12x^3 - 24x^4 + ...
    assert_eq!(
        result["scalar_series"],
        serde_json::json!(["1", "3", "-6", "12", "-24"])
    );
}

#[test]
fn seed_flag_overrides_the_job_field() {
    let job = r#"{"family":"prop42","level":1,"count":1,"seed":5}"#;
    let out = yhw(&["verify", "--seed", "9"], job);
    let report = json(&out);
    assert_eq!(report["result"]["seed"], 9);
}

#[test]
fn input_errors_exit_with_code_two() {
    for (args, stdin) in [
        (vec!["decide"], "not json"),
        (vec!["decide"], r#"{"parity":"0a1","weights":[]}"#),
        (
            vec!["decide"],
            r#"{"parity":"01","weights":[{"roots":["1/0"]},{"roots":["2"]}]}"#,
        ),
        (vec!["decide"], r#"{"parity":"01","unknown_field":1}"#),
        (
            vec!["decide"],
            r#"{"command":"reflect","parity":"01","weights":[{"roots":["1"]},{"roots":["2"]}]}"#,
        ),
        (
            vec!["reflect"],
            r#"{"parity":"01","weights":[{"roots":["1"]},{"roots":["2"]}]}"#,
        ),
        (vec!["verify"], r#"{"family":"unknown"}"#),
        (
            vec!["decide"],
            r#"{"parity":"01","level":3,"weights":[{"roots":["1"]},{"roots":["2"]}]}"#,
        ),
    ] {
        let out = yhw(&args, stdin);
        assert_eq!(
            out.status.code(),
            Some(2),
            "args {:?} stdin {}: stdout {}",
            args,
            stdin,
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn file_round_trip() {
    let dir = std::env::temp_dir().join(format!("yhw-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("job.json");
    let output = dir.join("report.json");
    std::fs::write(
        &input,
        r#"{"parity":"01","weights":[{"roots":["2"]},{"roots":["5"]}]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_yhw"))
        .args([
            "decide",
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(report["result"]["verdict"], "finite_dimensional");
    std::fs::remove_dir_all(&dir).ok();
}
