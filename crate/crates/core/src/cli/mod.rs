//! The `torusamp` command line: amplitudes, single Γ-factors and verification runs.
//!
//! [`run`] does all the work and returns the exit code with the text it produced, so
//! the binary is a thin wrapper and tests can call it directly.

pub mod expr;
pub mod golden;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::knotcalc::{self, AmplitudeVector, Normalization, RepKind};
use crate::macdonald::topological_locus;
use crate::partitions::{enumerate, Partition};
use crate::symfunc::{exact, parse_basis, Basis, SymFunc};
use expr::Display;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_REQUEST: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "torusamp", version, about = "Refined Chern-Simons amplitudes of torus knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the extended amplitude |P^(n,m)_R> in a chosen basis.
    Amplitude(AmplitudeArgs),
    /// Print a single Γ-factor.
    Gamma(GammaArgs),
    /// Check golden tables or sweep the Hall-Littlewood identities.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct AmplitudeArgs {
    /// Winding numbers `n,m`.
    #[arg(long, value_parser = parse_knot, allow_hyphen_values = true)]
    knot: (i64, i64),
    /// Colour, e.g. `2,1`.
    #[arg(long)]
    rep: Partition,
    /// macdonald, schur, hl, mschur (or p, m, qwhittaker, dhl).
    #[arg(long, default_value = "macdonald")]
    basis: String,
    #[arg(long, value_enum, default_value_t = Norm::Raw)]
    normalize: Norm,
    #[arg(long, value_enum, default_value_t = Method::Recursion)]
    method: Method,
    /// Write `t` as `tau^-1`.
    #[arg(long)]
    tau: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also print the sum specialized at `p_k -> (1 - t^-Nk)/(1 - t^-k)`.
    #[arg(long, value_name = "N")]
    topological: Option<usize>,
}

#[derive(Args, Debug)]
struct GammaArgs {
    #[arg(long, value_parser = parse_knot, allow_hyphen_values = true)]
    knot: (i64, i64),
    #[arg(long)]
    rep: Partition,
    #[arg(long)]
    row: Partition,
    #[arg(long)]
    col: Partition,
    #[arg(long)]
    tau: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Directory of golden JSON tables.
    #[arg(long, conflicts_with = "identity", required_unless_present = "identity")]
    golden: Option<PathBuf>,
    /// 41 (antisymmetric colours) or 42 (symmetric colours).
    #[arg(long, value_parser = ["41", "42"])]
    identity: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = 2)]
    max_r: usize,
    /// Largest `|A|`.
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Norm {
    Raw,
    LeadingRow,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Recursion,
    Hl,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn parse_knot(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected n,m, got '{s}'"))?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("'{x}': {e}"));
    Ok((p(a)?, p(b)?))
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn err(code: i32, msg: impl Into<String>) -> Self {
        Output { code, stdout: String::new(), stderr: msg.into() }
    }
}

/// Exit code for a library error raised while serving a request.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) | Error::Domain(_) | Error::NotAKnot { .. } | Error::Parse { .. } => EXIT_REQUEST,
        Error::Data(_) => EXIT_DATA,
        Error::Pole | Error::Singular(_) | Error::Internal(_) => EXIT_FAIL,
    }
}

fn fail(e: Error) -> Output {
    Output::err(exit_code(&e), format!("error: {e}\n"))
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_REQUEST } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Output::ok(text) } else { Output::err(code, text) };
        }
    };
    match cli.cmd {
        Command::Amplitude(a) => cmd_amplitude(&a),
        Command::Gamma(g) => cmd_gamma(&g),
        Command::Verify(v) => cmd_verify(&v),
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::PowerSum => "p",
        Basis::Monomial => "m",
        Basis::Schur => "schur",
        Basis::Macdonald => "macdonald",
        Basis::HallLittlewood => "hl",
        Basis::QWhittaker => "qwhittaker",
        Basis::DualHallLittlewood => "dhl",
        Basis::ModifiedSchur => "mschur",
    }
}

fn label(b: Basis, p: &Partition) -> String {
    if b == Basis::Macdonald {
        format!("[{p}]")
    } else {
        format!("{}[{p}]", b.symbol())
    }
}

fn text_line(f: &SymFunc, mode: Display) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let items: Vec<String> = f.terms().iter().map(|(p, c)| format!("{}: {}", label(f.basis(), p), expr::render(c, mode))).collect();
    items.join(", ")
}

fn json_record(a: &AmplitudeVector, mode: Display) -> Value {
    let coeffs: Map<String, Value> =
        a.coeffs.terms().iter().map(|(p, c)| (p.to_string(), Value::String(expr::render(c, mode)))).collect();
    json!({
        "knot": [a.n, a.m],
        "rep": a.rep.parts(),
        "basis": basis_name(a.basis()),
        "coeffs": coeffs,
    })
}

fn shortcut_params(rep: &Partition, n: i64, m: i64) -> Result<(RepKind, usize, i64), Error> {
    let (kind, r) = RepKind::of(rep).ok_or_else(|| Error::Domain(format!("the HL method needs a colour [1^r] or [r], got {rep:?}")))?;
    if n < 1 || (m - 1).rem_euclid(n) != 0 {
        return Err(Error::Domain(format!("the HL method needs a knot (n, nk+1), got ({n},{m})")));
    }
    Ok((kind, r, (m - 1) / n))
}

fn cmd_amplitude(a: &AmplitudeArgs) -> Output {
    let (n, m) = a.knot;
    let basis = match parse_basis(&a.basis) {
        Ok(b) => b,
        Err(e) => return fail(e),
    };
    let norm = match a.normalize {
        Norm::Raw => Normalization::Raw,
        Norm::LeadingRow => Normalization::LeadingRow,
    };
    let mode = if a.tau { Display::Tau } else { Display::QT };
    let eng = exact();
    let result = (|| -> Result<Output, Error> {
        knotcalc::check_knot(n, m)?;
        let render = |v: &AmplitudeVector| v.render(eng, basis, norm);
        let (mut shown, ratio, raw) = match a.method {
            Method::Recursion => {
                let v = knotcalc::amplitude_recursion(&a.rep, n, m)?;
                (vec![("recursion", render(&v)?)], None, v)
            }
            Method::Hl => {
                let (kind, r, k) = shortcut_params(&a.rep, n, m)?;
                let v = knotcalc::amplitude_hl(kind, r, n as usize, k)?.render(eng, Basis::Macdonald, Normalization::Raw)?;
                (vec![("hl", render(&v)?)], None, v)
            }
            Method::Both => {
                shortcut_params(&a.rep, n, m)?;
                let c = knotcalc::compare_routes(&a.rep, n, m)?;
                let shown = vec![("recursion", render(&c.recursion)?), ("hl", render(&c.shortcut)?)];
                let ok = c.monomial();
                (shown, Some((c.ratio, ok)), c.recursion)
            }
        };
        let locus = match a.topological {
            Some(big_n) => Some((big_n, topological_locus(&raw.coeffs, big_n))),
            None => None,
        };
        let mut out = String::new();
        match a.format {
            Format::Text => {
                if shown.len() == 1 {
                    out.push_str(&text_line(&shown[0].1.coeffs, mode));
                    out.push('\n');
                } else {
                    for (name, v) in &shown {
                        out.push_str(&format!("{name}: {}\n", text_line(&v.coeffs, mode)));
                    }
                }
                if let Some((r, _)) = &ratio {
                    let r = r.as_ref().map_or("not constant".to_string(), |r| expr::render(r, mode));
                    out.push_str(&format!("ratio: {r}\n"));
                }
                if let Some((big_n, v)) = &locus {
                    out.push_str(&format!("topological N={big_n}: {}\n", expr::render(v, mode)));
                }
            }
            Format::Json => {
                let mut v = if shown.len() == 1 {
                    json_record(&shown.remove(0).1, mode)
                } else {
                    let mut m = Map::new();
                    for (name, a) in &shown {
                        m.insert((*name).to_string(), json_record(a, mode));
                    }
                    if let Some((r, _)) = &ratio {
                        m.insert("ratio".into(), r.as_ref().map_or(Value::Null, |r| Value::String(expr::render(r, mode))));
                    }
                    Value::Object(m)
                };
                if let Some((big_n, val)) = &locus {
                    v["topological"] = json!({ "N": big_n, "value": expr::render(val, mode) });
                }
                out = serde_json::to_string_pretty(&v).expect("json") + "\n";
            }
        }
        match ratio {
            Some((_, false)) => Ok(Output {
                code: EXIT_FAIL,
                stdout: out,
                stderr: "error: the two routes differ by more than a single global monomial\n".into(),
            }),
            _ => Ok(Output::ok(out)),
        }
    })();
    result.unwrap_or_else(fail)
}

fn cmd_gamma(g: &GammaArgs) -> Output {
    let (n, m) = g.knot;
    match knotcalc::gamma(&g.rep, n, m, &g.row, &g.col) {
        Ok(v) => Output::ok(expr::render(&v, if g.tau { Display::Tau } else { Display::QT }) + "\n"),
        Err(e) => fail(e),
    }
}

fn cmd_verify(v: &VerifyArgs) -> Output {
    match (&v.golden, &v.identity) {
        (Some(dir), _) => verify_golden(dir, v.format),
        (None, Some(id)) => verify_identity(id, v),
        (None, None) => Output::err(EXIT_REQUEST, "error: pass --golden or --identity\n"),
    }
}

fn verify_golden(dir: &std::path::Path, format: Format) -> Output {
    let tables = match golden::load_dir(dir).and_then(|recs| recs.iter().map(|(id, r)| r.parse(id)).collect::<Result<Vec<_>, _>>()) {
        Ok(t) => t,
        Err(e) => return Output::err(EXIT_DATA, format!("error: {e}\n")),
    };
    if tables.is_empty() {
        return Output::err(EXIT_DATA, format!("error: no golden tables in {}\n", dir.display()));
    }
    let mut lines = String::new();
    let mut report = Vec::new();
    let mut all = true;
    for t in &tables {
        let (status, route, secs, witness) = match golden::check(t) {
            Ok(o) => {
                let pass = o.mismatch.is_none();
                (if pass { "PASS" } else { "FAIL" }, o.route.name(), o.elapsed.as_secs_f64(), o.mismatch.map(|m| m.describe()))
            }
            Err(e) => ("FAIL", "-", 0.0, Some(e.to_string())),
        };
        all &= status == "PASS";
        match &witness {
            None => lines.push_str(&format!("PASS {} ({route}, {secs:.2}s)\n", t.id)),
            Some(w) => lines.push_str(&format!("FAIL {}: {w}\n", t.id)),
        }
        report.push(json!({ "id": t.id, "status": status, "route": route, "seconds": secs, "witness": witness }));
    }
    let stdout = match format {
        Format::Text => lines,
        Format::Json => serde_json::to_string_pretty(&json!({ "records": report, "all_pass": all })).expect("json") + "\n",
    };
    Output { code: if all { EXIT_OK } else { EXIT_FAIL }, stdout, stderr: String::new() }
}

fn verify_identity(id: &str, v: &VerifyArgs) -> Output {
    let mut lines = String::new();
    let mut report = Vec::new();
    let mut all = true;
    for n in 1..=v.max_n {
        for r in 1..=v.max_r {
            for size in r..=v.max_size.max(r) {
                for a in enumerate(size) {
                    let start = Instant::now();
                    let res = if id == "41" { knotcalc::verify_theorem_41(n, r, &a) } else { knotcalc::verify_theorem_42(n, r, &a) };
                    let secs = start.elapsed().as_secs_f64();
                    let (status, witness) = match res {
                        Ok(knotcalc::Verdict::Holds) => ("HOLDS", None),
                        Ok(knotcalc::Verdict::Fails { witness, monomial_ratio }) => {
                            let extra = monomial_ratio.map(|m| format!(" (off by the monomial {})", expr::render(&m, Display::QT)));
                            ("FAILS", Some(witness + &extra.unwrap_or_default()))
                        }
                        Err(e) => ("ERROR", Some(e.to_string())),
                    };
                    all &= status == "HOLDS";
                    match &witness {
                        None => lines.push_str(&format!("HOLDS n={n} r={r} A=[{a}]\n")),
                        Some(w) => lines.push_str(&format!("{status} n={n} r={r} A=[{a}]: {w}\n")),
                    }
                    report.push(json!({ "n": n, "r": r, "A": a.to_string(), "status": status, "seconds": secs, "witness": witness }));
                }
            }
        }
    }
    let stdout = match v.format {
        Format::Text => lines,
        Format::Json => serde_json::to_string_pretty(&json!({ "identity": id, "cases": report, "all_hold": all })).expect("json") + "\n",
    };
    Output { code: if all { EXIT_OK } else { EXIT_FAIL }, stdout, stderr: String::new() }
}
