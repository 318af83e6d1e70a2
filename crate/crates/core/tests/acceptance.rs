//! One status line per acceptance criterion. Lines go straight to stdout so
//! they show up without --nocapture.

use std::io::Write;
use std::time::Instant;

use serde_json::json;
use weylstab::suite::{acceptance, run_checks, CheckResult, DEFAULT_MAX_N};

/// Checks that fail for a mathematical reason rather than a defect: s(4)
/// fixes a 2-dimensional space of Weyl tensors (r1 fixes it pointwise and
/// the grading acts on it by a single scalar), so no line is singled out.
fn known_failure(r: &CheckResult) -> bool {
    r.check == "s-unique-line" && r.params.get("n") == Some(&json!(4))
}

fn describe(r: &CheckResult) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(
        "{}[{}] expected {} computed {}",
        r.check,
        params.join(","),
        r.expected,
        r.computed
    )
}

#[test]
fn acceptance_criteria() {
    let mut out = std::io::stdout().lock();
    let mut unexpected = Vec::new();
    let mut known_seen = 0;
    for c in acceptance(DEFAULT_MAX_N).unwrap() {
        let start = Instant::now();
        let report = run_checks(&c.checks, false).unwrap();
        let total = report.results.len();
        let failures = report.failures();
        let secs = start.elapsed().as_secs_f64();
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "criterion {:>2} {:<32} {status} ({}/{total} checks, {secs:.1}s)",
            c.number,
            c.title,
            total - failures.len()
        )
        .unwrap();
        for f in &failures {
            let tag = if known_failure(f) {
                "known"
            } else {
                "UNEXPECTED"
            };
            writeln!(out, "    {tag}: {}", describe(f)).unwrap();
            if known_failure(f) {
                known_seen += 1;
            } else {
                unexpected.push(describe(f));
            }
        }
    }
    out.flush().unwrap();
    assert!(
        unexpected.is_empty(),
        "unexpected failures: {unexpected:#?}"
    );
    assert_eq!(
        known_seen, 1,
        "the s(4) line check no longer fails; revisit criterion 3"
    );
}
