//! Verification reports and their CSV/JSON serializations.
//!
//! Report files are byte-deterministic for identical inputs: rows keep
//! a stable order and the runtime column is written as 0 unless timing
//! output is explicitly requested (wall-clock values would differ run
//! to run).

use std::collections::BTreeMap;

use serde::Serialize;

/// Outcome of verifying one theorem instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    SkippedPrecondition,
    InexactBudget,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::SkippedPrecondition => "skipped-precondition",
            Status::InexactBudget => "inexact-budget",
        };
        f.write_str(s)
    }
}

/// One verified parameter point: the claimed bound value, the measured
/// value, and how they compared.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub params: BTreeMap<String, String>,
    pub claimed: Option<i64>,
    pub measured: Option<i64>,
    pub status: Status,
    pub witness: Option<String>,
    /// Wall-clock milliseconds; kept in memory and console output only,
    /// normalized to zero in report files.
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl VerificationReport {
    /// Console form: one line per point.
    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{:<4} [{}] claimed={} measured={} -> {}",
            self.theorem_id,
            params.join(","),
            opt(self.claimed),
            opt(self.measured),
            self.status
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" ({w})"));
        }
        line.push_str(&format!(" [{} ms]", self.runtime_ms));
        line
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

pub const CSV_HEADER: &str = "theorem_id,n1,n2,extra,claimed,measured,status,runtime_ms";

/// Fixed-column CSV row. `n1` falls back from params `n1` to `n`, `n2`
/// from `n2` to `m`; every other parameter lands in `extra` as
/// semicolon-joined `key=value` pairs in key order.
pub fn csv_row(r: &VerificationReport, with_runtime: bool) -> String {
    let pick = |primary: &str, fallback: &str| {
        if r.params.contains_key(primary) {
            Some(primary.to_string())
        } else if r.params.contains_key(fallback) {
            Some(fallback.to_string())
        } else {
            None
        }
    };
    let n1_key = pick("n1", "n");
    let n2_key = pick("n2", "m");
    let extra: Vec<String> = r
        .params
        .iter()
        .filter(|(k, _)| Some(*k) != n1_key.as_ref() && Some(*k) != n2_key.as_ref())
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let col = |key: &Option<String>| key.as_ref().map(|k| r.params[k].as_str()).unwrap_or("");
    let runtime = if with_runtime { r.runtime_ms } else { 0 };
    format!(
        "{},{},{},{},{},{},{},{}",
        r.theorem_id,
        col(&n1_key),
        col(&n2_key),
        extra.join(";"),
        opt_csv(r.claimed),
        opt_csv(r.measured),
        r.status,
        runtime
    )
}

fn opt_csv(v: Option<i64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub fn write_csv(reports: &[VerificationReport], with_runtime: bool) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&csv_row(r, with_runtime));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonReportFile<'a> {
    reports: &'a [VerificationReport],
    summary: StatusCounts,
}

/// Aggregate tally by status.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct StatusCounts {
    pub holds: usize,
    pub violated: usize,
    pub skipped_precondition: usize,
    pub inexact_budget: usize,
}

impl StatusCounts {
    pub fn tally(reports: &[VerificationReport]) -> Self {
        let mut c = StatusCounts::default();
        for r in reports {
            match r.status {
                Status::Holds => c.holds += 1,
                Status::Violated => c.violated += 1,
                Status::SkippedPrecondition => c.skipped_precondition += 1,
                Status::InexactBudget => c.inexact_budget += 1,
            }
        }
        c
    }

    pub fn summary_line(&self) -> String {
        format!(
            "holds={} violated={} skipped-precondition={} inexact-budget={}",
            self.holds, self.violated, self.skipped_precondition, self.inexact_budget
        )
    }

    /// Process exit code: 0 clean, 2 on any violation, 3 when
    /// inconclusive (budget-limited) points remain.
    pub fn exit_code(&self) -> i32 {
        if self.violated > 0 {
            2
        } else if self.inexact_budget > 0 {
            3
        } else {
            0
        }
    }
}

pub fn write_json(reports: &[VerificationReport]) -> String {
    let file = JsonReportFile { reports, summary: StatusCounts::tally(reports) };
    let mut text = serde_json::to_string_pretty(&file).expect("report serialization");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut params = BTreeMap::new();
        params.insert("n1".into(), "3".into());
        params.insert("n2".into(), "5".into());
        params.insert("k".into(), "2".into());
        VerificationReport {
            theorem_id: "T5".into(),
            params,
            claimed: Some(3),
            measured: Some(3),
            status: Status::Holds,
            witness: None,
            runtime_ms: 17,
        }
    }

    #[test]
    fn csv_layout() {
        let row = csv_row(&sample(), false);
        assert_eq!(row, "T5,3,5,k=2,3,3,holds,0");
        let with_time = csv_row(&sample(), true);
        assert!(with_time.ends_with(",17"));
    }

    #[test]
    fn csv_n_fallback() {
        let mut r = sample();
        r.params = BTreeMap::from([("n".to_string(), "4".to_string())]);
        assert_eq!(csv_row(&r, false), "T5,4,,,3,3,holds,0");
    }

    #[test]
    fn json_is_deterministic_and_excludes_runtime() {
        let reports = vec![sample(), sample()];
        let a = write_json(&reports);
        let mut altered = reports.clone();
        altered[0].runtime_ms = 99_999;
        let b = write_json(&altered);
        assert_eq!(a, b);
        assert!(a.contains("\"holds\": 2"));
    }

    #[test]
    fn exit_codes() {
        let mut c = StatusCounts::default();
        assert_eq!(c.exit_code(), 0);
        c.inexact_budget = 1;
        assert_eq!(c.exit_code(), 3);
        c.violated = 1;
        assert_eq!(c.exit_code(), 2);
    }
}
