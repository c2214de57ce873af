//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string. The plain `*_json` functions carry the
//! logic so they can be tested natively.

use bellforge::arith::format_rational;
use bellforge::partfun::{ratio_values, Method, NamedFunction};
use bellforge::report::SequenceReport;
use bellforge::specfile::parse_ratio;
use bellforge::verify::{run_identity, Identity};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest `max` the page accepts; keeps a single call under a few seconds.
pub const MAX_TERMS: usize = 400;

/// Partition sums stop here in the browser; the series takes over beyond.
pub const BROWSER_FAA_CAP: usize = 40;

fn check_max(max: usize) -> Result<(), String> {
    if max > MAX_TERMS {
        return Err(format!("max is limited to {MAX_TERMS} in the browser"));
    }
    Ok(())
}

fn parse_parts(parts: &str) -> Result<Option<Vec<u64>>, String> {
    let parts = parts.trim();
    if parts.is_empty() {
        return Ok(None);
    }
    parts
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| format!("bad part '{}'", p.trim())))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// `{name, params, values: [[n, "value"], ...], verdicts}` for a named function.
pub fn sequence_json(name: &str, max: usize, parts: &str) -> Result<String, String> {
    check_max(max)?;
    let parts = parse_parts(parts)?;
    let parts = if name == "w" { parts } else { None };
    let function = NamedFunction::parse(name, parts.as_deref()).map_err(|e| e.to_string())?;
    let values = function
        .sequence(max, Method::Auto { cap: BROWSER_FAA_CAP })
        .map_err(|e| e.to_string())?;
    let mut report = SequenceReport::new(function.name()).param("max", max);
    for (n, v) in values.iter().enumerate() {
        report.push_value(n, v);
    }
    Ok(report.to_json())
}

/// Coefficients of a spec-file ratio by both methods:
/// `{rows: [{n, faa, series, agree}], agree}`. `faa` is null past the cap.
pub fn expand_json(spec: &str, max: usize) -> Result<String, String> {
    check_max(max)?;
    let ratio = parse_ratio(spec).map_err(|e| e.to_string())?;
    let faa = ratio_values(&ratio, max.min(BROWSER_FAA_CAP), Method::FaaDiBruno);
    let series = ratio_values(&ratio, max, Method::Series);
    let rows: Vec<_> = series
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let f = faa.get(n);
            json!({
                "n": n,
                "faa": f.map(format_rational),
                "series": format_rational(s),
                "agree": f.is_none_or(|f| f == s),
            })
        })
        .collect();
    let agree = rows.iter().all(|r| r["agree"] == true);
    Ok(json!({ "rows": rows, "agree": agree, "faa_cap": BROWSER_FAA_CAP }).to_string())
}

/// An identity suite report as JSON.
pub fn verify_json(identity: &str, max: usize) -> Result<String, String> {
    check_max(max)?;
    let identity: Identity = identity.parse().map_err(|e: bellforge::Error| e.to_string())?;
    let report = run_identity(identity, max, BROWSER_FAA_CAP).map_err(|e| e.to_string())?;
    Ok(report.to_json())
}

#[wasm_bindgen]
pub fn sequence(name: &str, max: usize, parts: &str) -> Result<String, JsError> {
    sequence_json(name, max, parts).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expand(spec: &str, max: usize) -> Result<String, JsError> {
    expand_json(spec, max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(identity: &str, max: usize) -> Result<String, JsError> {
    verify_json(identity, max).map_err(|e| JsError::new(&e))
}
