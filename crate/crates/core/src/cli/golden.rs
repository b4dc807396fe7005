//! Golden amplitude tables stored as JSON, one table per file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::expr::{self, Display};
use crate::arith::RatFunc;
use crate::error::{Error, Result};
use crate::knotcalc::normalized::{in_n_q_tau, normalized_table, Route};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenRecord {
    pub knot: (i64, i64),
    pub rep: Vec<usize>,
    pub basis: String,
    /// Coefficients are written in `q` and `tau`.
    #[serde(default)]
    pub tau: bool,
    #[serde(default = "leading_row")]
    pub normalize: String,
    pub coeffs: BTreeMap<String, String>,
    /// Partitions the source table does not list; they are neither read as zero nor checked.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omitted: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn leading_row() -> String {
    "leading-row".into()
}

/// A record with its coefficients parsed.
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub id: String,
    pub rep: Partition,
    pub n: i64,
    pub m: i64,
    pub coeffs: BTreeMap<Partition, RatFunc>,
    pub omitted: Vec<Partition>,
}

impl GoldenRecord {
    pub fn parse(&self, id: &str) -> Result<GoldenTable> {
        if self.basis != "mschur" || self.normalize != "leading-row" {
            return Err(Error::Data(format!("{id}: only mschur with leading-row normalization is supported")));
        }
        let rep = Partition::new(self.rep.clone())?;
        let d = self.knot.0.max(0) as usize * rep.size();
        let part = |s: &str| -> Result<Partition> {
            let p: Partition = s.parse().map_err(|e| Error::Data(format!("{id}: partition '{s}': {e}")))?;
            if p.size() != d {
                return Err(Error::Data(format!("{id}: partition {p} does not have size {d}")));
            }
            Ok(p)
        };
        let mut coeffs = BTreeMap::new();
        for (k, v) in &self.coeffs {
            let c = expr::parse(v).map_err(|e| match e {
                Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{id}, S~[{k}]: {msg}") },
                other => other,
            })?;
            coeffs.insert(part(k)?, c);
        }
        let omitted = self.omitted.iter().map(|s| part(s)).collect::<Result<_>>()?;
        Ok(GoldenTable { id: id.to_string(), rep, n: self.knot.0, m: self.knot.1, coeffs, omitted })
    }
}

/// Reads every `*.json` file of `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, GoldenRecord)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::Data(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let id = p.file_name().unwrap().to_string_lossy().into_owned();
            let text = fs::read_to_string(&p).map_err(|e| Error::Data(format!("{id}: {e}")))?;
            let rec = serde_json::from_str(&text)
                .map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: format!("{id}: {e}") })?;
            Ok((id, rec))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Mismatch {
    Coefficient { partition: Partition, expected: RatFunc, got: RatFunc },
    /// A computed coefficient is not in `N[q, tau]`.
    NotPositive { partition: Partition, got: RatFunc },
}

impl Mismatch {
    pub fn describe(&self) -> String {
        match self {
            Mismatch::Coefficient { partition, expected, got } => format!(
                "S~[{partition}]: expected {}, computed {}",
                expr::render(expected, Display::Tau),
                expr::render(got, Display::Tau)
            ),
            Mismatch::NotPositive { partition, got } => {
                format!("S~[{partition}]: computed {} is not in N[q,tau]", expr::render(got, Display::Tau))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: String,
    pub route: Route,
    pub elapsed: Duration,
    /// First mismatch in partition order; `None` is a pass.
    pub mismatch: Option<Mismatch>,
    /// Every computed coefficient lies in `N[q, tau]`.
    pub positive: bool,
}

/// Recomputes a table and compares it coefficient by coefficient.
pub fn check(g: &GoldenTable) -> Result<Outcome> {
    let start = std::time::Instant::now();
    let t = normalized_table(&g.rep, g.n, g.m)?;
    let zero = RatFunc::zero();
    let mut keys: Vec<&Partition> = g.coeffs.keys().chain(t.coeffs.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    let mut mismatch = None;
    for p in keys {
        if g.omitted.contains(p) {
            continue;
        }
        let expected = g.coeffs.get(p).unwrap_or(&zero);
        let got = t.coeffs.coeff(p);
        if *expected != got {
            mismatch = Some(Mismatch::Coefficient { partition: p.clone(), expected: expected.clone(), got });
            break;
        }
    }
    let bad = t.coeffs.terms().iter().find(|(_, c)| !in_n_q_tau(c));
    let positive = bad.is_none();
    if mismatch.is_none() {
        mismatch = bad.map(|(p, c)| Mismatch::NotPositive { partition: p.clone(), got: c.clone() });
    }
    Ok(Outcome { id: g.id.clone(), route: t.route, elapsed: start.elapsed(), mismatch, positive })
}
