//! Corpus runner: JSON lines of {"expr": "...", "expected": {"mu": 0,
//! "d_bar": "1/2"}}. Every expectation is compared exactly; any failure
//! makes the exit status nonzero.

use std::path::Path;
use std::process::ExitCode;

use serde::Deserialize;
use serde_json::json;
use zeroconc::engine::profile;
use zeroconc::rational::{format_rat, parse_rat};

#[derive(Deserialize)]
struct CorpusLine {
    expr: String,
    #[serde(default)]
    expected: Expected,
}

#[derive(Deserialize, Default)]
struct Expected {
    mu: Option<i64>,
    d_bar: Option<String>,
}

struct LineResult {
    line: usize,
    expr: String,
    failures: Vec<String>,
    got_mu: Option<u8>,
    got_d: Option<String>,
}

pub fn run(path: &Path, json_out: bool) -> anyhow::Result<ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let mut results = Vec::new();
    let mut failed = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let mut failures = Vec::new();
        let mut got_mu = None;
        let mut got_d = None;
        match serde_json::from_str::<CorpusLine>(raw) {
            Err(e) => failures.push(format!("schema error: {e}")),
            Ok(line) => {
                match zeroconc::parse_two_knot(&line.expr) {
                    Err(e) => failures.push(format!("parse error: {e}")),
                    Ok(knot) => {
                        let p = profile(&knot);
                        got_mu = p.mu().map(|m| m.value());
                        got_d = p.d_bar().map(|d| format_rat(&d));
                        if let Some(want) = line.expected.mu {
                            match got_mu {
                                Some(g) if i64::from(g) == want.rem_euclid(16) => {}
                                Some(g) => failures
                                    .push(format!("mu: expected {want}, got {g}")),
                                None => failures
                                    .push(format!("mu: expected {want}, got unknown")),
                            }
                        }
                        if let Some(want_text) = &line.expected.d_bar {
                            match parse_rat(want_text) {
                                None => failures
                                    .push(format!("bad expected d_bar '{want_text}'")),
                                Some(want) => match p.d_bar() {
                                    Some(g) if g == want => {}
                                    Some(g) => failures.push(format!(
                                        "d_bar: expected {want_text}, got {}",
                                        format_rat(&g)
                                    )),
                                    None => failures.push(format!(
                                        "d_bar: expected {want_text}, got unknown"
                                    )),
                                },
                            }
                        }
                    }
                }
                results.push(LineResult {
                    line: lineno,
                    expr: line.expr,
                    failures,
                    got_mu,
                    got_d,
                });
                if !results.last().unwrap().failures.is_empty() {
                    failed += 1;
                }
                continue;
            }
        }
        // Schema-level failure path.
        results.push(LineResult {
            line: lineno,
            expr: raw.to_string(),
            failures,
            got_mu,
            got_d,
        });
        failed += 1;
    }
    let passed = results.len() - failed;
    if json_out {
        let lines: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                json!({
                    "line": r.line,
                    "expr": r.expr,
                    "status": if r.failures.is_empty() { "pass" } else { "fail" },
                    "mu": r.got_mu,
                    "d_bar": r.got_d,
                    "failures": r.failures,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "passed": passed,
                "failed": failed,
                "lines": lines,
            }))?
        );
    } else {
        for r in &results {
            if r.failures.is_empty() {
                println!("line {:>3}: PASS  {}", r.line, r.expr);
            } else {
                println!("line {:>3}: FAIL  {} ({})", r.line, r.expr, r.failures.join("; "));
            }
        }
        println!("corpus: {passed} passed, {failed} failed");
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
