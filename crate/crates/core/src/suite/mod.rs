//! Named verification checks with frozen expected values, run in parallel and
//! reported deterministically.

mod checks;
mod criteria;
mod oracle;
mod props;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use checks::{
    enumerate_regular_checks, irrep_dim_checks, levi_checks, lorentzian_report, realforms_checks,
    rep_type_checks, riemannian_report, stabilizer_checks,
};
pub use criteria::{acceptance, criterion, Criterion, CRITERIA, DEFAULT_MAX_N};
pub use oracle::{fundamental_dim_closed_form, rep_type_by_coroot, weyl_dim_eps};
pub use props::{property_checks, Property, PROPERTY_INSTANCES};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "WEYLSTAB_THREADS";

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A closed formula or a published table entry.
    ClosedForm,
    /// Holds by definition or by a trivial identity.
    Definition,
    /// Computed once by an independent oracle and frozen.
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Definition => "definition",
            Provenance::Oracle => "oracle",
        })
    }
}

/// Expected and computed values of one check.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub expected: Value,
    pub computed: Value,
}

impl Outcome {
    pub fn new(expected: impl Serialize, computed: impl Serialize) -> Outcome {
        Outcome {
            expected: to_value(expected),
            computed: to_value(computed),
        }
    }
}

pub(crate) fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("check values serialize")
}

type Runner = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

/// A named check, evaluated lazily.
pub struct Check {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub provenance: Provenance,
    run: Runner,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        provenance: Provenance,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Check {
        Check {
            name: name.into(),
            params: BTreeMap::new(),
            provenance,
            run: Box::new(run),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Check {
        self.params.insert(key.to_string(), to_value(value));
        self
    }

    pub fn evaluate(&self, timings: bool) -> CheckResult {
        let start = Instant::now();
        let (expected, computed) = match (self.run)() {
            Ok(o) => (o.expected, o.computed),
            Err(e) => (Value::Null, serde_json::json!({ "error": e.to_string() })),
        };
        let ms = timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
        CheckResult {
            check: self.name.clone(),
            params: self.params.clone(),
            pass: expected != Value::Null && expected == computed,
            expected,
            computed,
            provenance: self.provenance,
            ms: ms.map(|m| (m * 1000.0).round() / 1000.0),
        }
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

/// Pass iff expected and computed are identical.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub expected: Value,
    pub computed: Value,
    pub provenance: Provenance,
    pub pass: bool,
    /// Elapsed milliseconds; None unless timings were requested.
    pub ms: Option<f64>,
}

/// Worker pool sized by `WEYLSTAB_THREADS` when set.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            Error::Parse(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))
        })?;
        b = b.num_threads(n);
    }
    b.build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))
}

/// Runs checks in parallel; results keep the input order.
pub fn run_checks(checks: &[Check], timings: bool) -> Result<Report> {
    let pool = thread_pool()?;
    let results = pool.install(|| checks.par_iter().map(|c| c.evaluate(timings)).collect());
    Ok(Report { results })
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.results.extend(other.results);
    }

    /// JSON array with sorted keys; identical inputs give identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&sorted(to_value(&self.results)))
            .expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text table, one row per check.
    pub fn to_table(&self) -> String {
        let timed = self.results.iter().any(|r| r.ms.is_some());
        let mut rows = vec![{
            let mut h = vec![
                "check",
                "params",
                "expected",
                "computed",
                "provenance",
                "pass",
            ];
            if timed {
                h.push("ms");
            }
            h.into_iter().map(String::from).collect::<Vec<_>>()
        }];
        for r in &self.results {
            let params: Vec<String> = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", compact(v)))
                .collect();
            let mut row = vec![
                r.check.clone(),
                params.join(" "),
                clip(&compact(&r.expected)),
                clip(&compact(&r.computed)),
                r.provenance.to_string(),
                if r.pass { "PASS".into() } else { "FAIL".into() },
            ];
            if timed {
                row.push(r.ms.map(|m| format!("{m:.1}")).unwrap_or_default());
            }
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &rows {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        let passed = self.results.iter().filter(|r| r.pass).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.results.len()));
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn clip(s: &str) -> String {
    const MAX: usize = 72;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        let head: String = s.chars().take(MAX - 3).collect();
        format!("{head}...")
    }
}

/// Rebuilds every object with keys in sorted order, whatever map type
/// serde_json was built with.
fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let b: BTreeMap<String, Value> = m.into_iter().map(|(k, v)| (k, sorted(v))).collect();
            Value::Object(b.into_iter().collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_requires_exact_equality() {
        let ok = Check::new("same", Provenance::Definition, || {
            Ok(Outcome::new("1/2", "1/2"))
        });
        let bad = Check::new("differs", Provenance::Definition, || Ok(Outcome::new(3, 4)));
        let err = Check::new("errors", Provenance::Definition, || {
            Err(Error::InvalidArgument("boom".into()))
        });
        let r = run_checks(&[ok, bad, err], false).unwrap();
        assert_eq!(
            r.results.iter().map(|r| r.pass).collect::<Vec<_>>(),
            [true, false, false]
        );
        assert_eq!(r.results[2].computed["error"], "invalid argument: boom");
        assert!(r.results.iter().all(|r| r.ms.is_none()));
    }

    #[test]
    fn json_keys_are_sorted() {
        let c = Check::new("k", Provenance::Oracle, || Ok(Outcome::new(1, 1)))
            .param("z", 1)
            .param("a", 2);
        let json = run_checks(&[c], false).unwrap().to_json();
        let keys = [
            "check",
            "computed",
            "expected",
            "ms",
            "params",
            "pass",
            "provenance",
        ];
        let pos: Vec<usize> = keys
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(json.find("\"a\"").unwrap() < json.find("\"z\"").unwrap());
    }
}
