//! Browser bindings: each call runs one command-line request and returns its JSON.

use torusamp::cli::{run, EXIT_FAIL, EXIT_OK};
use wasm_bindgen::prelude::*;

fn request(args: &[&str]) -> Result<String, String> {
    let out = run(std::iter::once("torusamp").chain(args.iter().copied()));
    match out.code {
        EXIT_OK => Ok(out.stdout),
        // a non-monomial route ratio is still a complete report
        EXIT_FAIL if !out.stdout.is_empty() => Ok(out.stdout),
        _ => Err(out.stderr.trim().trim_start_matches("error: ").to_string()),
    }
}

fn knot(n: i32, m: i32) -> String {
    format!("{n},{m}")
}

/// Amplitude coefficients. `method` is `recursion` or `hl`; `mschur` is rendered with
/// leading-row normalization, every other basis raw.
pub fn amplitude_json(n: i32, m: i32, rep: &str, basis: &str, method: &str, tau: bool) -> Result<String, String> {
    let k = knot(n, m);
    let norm = if basis == "mschur" { "leading-row" } else { "raw" };
    let mut args = vec!["amplitude", "--knot", &k, "--rep", rep, "--basis", basis, "--normalize", norm];
    args.extend(["--method", method, "--format", "json"]);
    if tau {
        args.push("--tau");
    }
    request(&args)
}

/// Both routes side by side with their ratio.
pub fn compare_json(n: i32, m: i32, rep: &str, tau: bool) -> Result<String, String> {
    let k = knot(n, m);
    let mut args = vec!["amplitude", "--knot", &k, "--rep", rep, "--method", "both", "--basis", "mschur"];
    args.extend(["--normalize", "leading-row", "--format", "json"]);
    if tau {
        args.push("--tau");
    }
    request(&args)
}

/// A single Γ entry as text.
pub fn gamma_text(n: i32, m: i32, rep: &str, row: &str, col: &str, tau: bool) -> Result<String, String> {
    let k = knot(n, m);
    let mut args = vec!["gamma", "--knot", &k, "--rep", rep, "--row", row, "--col", col];
    if tau {
        args.push("--tau");
    }
    request(&args).map(|s| s.trim().to_string())
}

#[wasm_bindgen]
pub fn amplitude(n: i32, m: i32, rep: &str, basis: &str, method: &str, tau: bool) -> Result<String, JsError> {
    amplitude_json(n, m, rep, basis, method, tau).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn compare(n: i32, m: i32, rep: &str, tau: bool) -> Result<String, JsError> {
    compare_json(n, m, rep, tau).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gamma(n: i32, m: i32, rep: &str, row: &str, col: &str, tau: bool) -> Result<String, JsError> {
    gamma_text(n, m, rep, row, col, tau).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_table() {
        let j = amplitude_json(2, 1, "1,1", "mschur", "hl", true).unwrap();
        assert!(j.contains("\"3,1\": \"tau\""), "{j}");
    }

    #[test]
    fn ratio_report_survives_a_failing_comparison() {
        let j = compare_json(2, 1, "2", false).unwrap();
        assert!(j.contains("\"ratio\""), "{j}");
    }

    #[test]
    fn errors_carry_the_message() {
        assert_eq!(gamma_text(2, 1, "1", "2", "0", false).unwrap(), "t");
        let e = amplitude_json(2, 4, "1", "macdonald", "recursion", false).unwrap_err();
        assert!(e.starts_with("torus links unsupported"), "{e}");
    }
}
