use std::collections::BTreeMap;

use torusamp::arith::RatFunc;
use torusamp::cli::expr::parse;
use torusamp::cli::{run, Output, EXIT_FAIL, EXIT_OK, EXIT_REQUEST};

fn cli(args: &str) -> Output {
    run(std::iter::once("torusamp").chain(args.split_whitespace()))
}

fn value(s: &str) -> RatFunc {
    parse(s.trim()).unwrap_or_else(|e| panic!("{s}: {e}"))
}

// "S~[4]: 1, S~[3,1]: tau" -> {"S~[4]": 1, "S~[3,1]": 1/t}
fn entries(line: &str) -> BTreeMap<String, RatFunc> {
    let mut out = BTreeMap::new();
    let mut pieces: Vec<String> = Vec::new();
    for p in line.trim().split(", ") {
        if p.starts_with('[') || p.starts_with("S~[") || pieces.is_empty() {
            pieces.push(p.to_string());
        } else {
            let last = pieces.last_mut().unwrap();
            last.push_str(", ");
            last.push_str(p);
        }
    }
    for p in pieces {
        let (k, v) = p.split_once(": ").unwrap();
        out.insert(k.to_string(), value(v));
    }
    out
}

fn map(pairs: &[(&str, &str)]) -> BTreeMap<String, RatFunc> {
    pairs.iter().map(|(k, v)| (k.to_string(), value(v))).collect()
}

#[test]
fn amplitude_examples() {
    let o = cli("amplitude --knot 2,3 --rep 1 --basis macdonald --normalize raw --method recursion");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(entries(&o.stdout), map(&[("[2]", "t^2/q^2"), ("[1,1]", "t^3*(t^2-1)/(1-t*q)")]));

    let o = cli("amplitude --knot 1,0 --rep 1 --basis macdonald");
    assert_eq!(o.stdout.trim(), "[1]: 1");

    let o = cli("amplitude --knot 2,1 --rep 1,1 --basis mschur --normalize leading-row --tau");
    assert_eq!(o.stdout.trim(), "S~[4]: 1, S~[3,1]: tau, S~[2,2]: tau^2");

    // the symmetric colour is the tau-free table
    let o = cli("amplitude --knot 2,1 --rep 2 --basis mschur --normalize leading-row --tau");
    assert_eq!(o.stdout.trim(), "S~[4]: 1, S~[3,1]: q, S~[2,2]: q^2");
}

#[test]
fn amplitude_json_and_topological() {
    let o = cli("amplitude --knot 2,3 --rep 1 --format json --topological 2");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["knot", "rep", "basis", "coeffs", "topological"]);
    assert_eq!(v["knot"], serde_json::json!([2, 3]));
    assert_eq!(value(v["coeffs"]["2"].as_str().unwrap()), value("t^2/q^2"));
    let top = value(v["topological"]["value"].as_str().unwrap());
    assert!(top.is_laurent_poly());
}

#[test]
fn both_methods_report_the_ratio() {
    let o = cli("amplitude --knot 2,1 --rep 1,1 --method both");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let ratio = o.stdout.lines().find_map(|l| l.strip_prefix("ratio: ")).unwrap();
    assert!(value(ratio).as_monomial().is_some());

    let o = cli("amplitude --knot 2,1 --rep 2 --method both");
    assert_eq!(o.code, EXIT_FAIL);
    assert!(o.stdout.contains("ratio: "));
}

#[test]
fn gamma_examples() {
    assert_eq!(cli("gamma --knot 2,1 --rep 1 --row 2 --col 0").stdout.trim(), "t");
    assert_eq!(cli("gamma --knot 2,3 --rep 1 --row 1 --col 0").stdout.trim(), "0");
    let o = cli("gamma --knot 1,0 --rep 1 --row 1,1 --col 1");
    assert_eq!(value(&o.stdout), value("(1-q)*(1+t)/(1-q*t)"));
    let o = cli("gamma --knot 2,1 --rep 1 --row 2 --col 0 --tau");
    assert!(o.stdout.contains("tau"), "{}", o.stdout);
    assert_eq!(value(&o.stdout), RatFunc::t());
}

#[test]
fn bad_requests_exit_with_two() {
    let o = cli("amplitude --knot 2,4 --rep 1");
    assert_eq!(o.code, EXIT_REQUEST);
    assert!(o.stderr.contains("torus links unsupported"), "{}", o.stderr);
    assert_eq!(cli("amplitude --knot 2,1 --rep 2,1 --method hl").code, EXIT_REQUEST);
    assert_eq!(cli("amplitude --knot 0,1 --rep 1").code, EXIT_REQUEST);
    assert_eq!(cli("amplitude --knot 2,1 --rep 1 --basis nonsense").code, EXIT_REQUEST);
    assert_eq!(cli("amplitude --knot 2 --rep 1").code, EXIT_REQUEST);
    assert_eq!(cli("gamma --knot 2,1 --rep 1 --row 1,2 --col 0").code, EXIT_REQUEST);
    assert_eq!(cli("frobnicate").code, EXIT_REQUEST);
    assert_eq!(cli("--help").code, EXIT_OK);
}

#[test]
fn identity_sweep() {
    let o = cli("verify --identity 42 --max-n 3 --max-r 1 --max-size 3");
    // n = 1 is reported as failing; every n >= 2 case holds
    assert_eq!(o.code, EXIT_FAIL);
    for line in o.stdout.lines() {
        assert!(line.starts_with("HOLDS") || line.contains("n=1 "), "{line}");
    }
    let o = cli("verify --identity 41 --max-n 2 --max-r 1 --max-size 2 --format json");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["all_hold"], serde_json::Value::Bool(false));
    let last = v["cases"].as_array().unwrap().last().unwrap();
    assert!(last["witness"].as_str().unwrap().contains("t^(3/2)"));
}
