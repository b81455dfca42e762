//! Report document and its JSON, Markdown and text renderings.

use std::fmt::Write as _;

use harmid_core::registry::IdentityClass;
use harmid_core::series::{Status, VerificationResult};
use serde::Serialize;

use crate::config::RunConfig;

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointDetail {
    pub point: String,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub delta: Option<f64>,
    pub tolerance: f64,
    pub reason: Option<String>,
}

impl From<&VerificationResult> for PointDetail {
    fn from(r: &VerificationResult) -> Self {
        PointDetail {
            point: r.point.clone(),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            delta: r.delta,
            tolerance: r.tolerance,
            reason: r.reason.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub id: String,
    pub class: IdentityClass,
    pub anchor: String,
    pub points: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub status: Status,
    /// Largest |lhs − rhs| over the checked points.
    pub worst_delta: Option<f64>,
    /// Tolerance at the point closest to failing.
    pub tolerance: Option<f64>,
    pub error_bound: Option<f64>,
    pub methods: Vec<String>,
    pub first_failure: Option<PointDetail>,
    pub first_skip: Option<PointDetail>,
    /// Summed time of the entry's points; only with `--timings`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralCheck {
    pub id: String,
    pub description: String,
    pub sizes: String,
    pub trials: usize,
    pub status: Status,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub identities: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub points: usize,
    pub points_skipped: usize,
}

impl Summary {
    pub fn tally(main: &[Entry], reference: &[Entry], general: &[GeneralCheck]) -> Summary {
        let mut s = Summary::default();
        let mut add = |st: Status| match st {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped => s.skipped += 1,
        };
        for e in main.iter().chain(reference) {
            add(e.status);
        }
        for g in general {
            add(g.status);
        }
        s.identities = main.len() + reference.len() + general.len();
        s.points = main.iter().chain(reference).map(|e| e.points).sum();
        s.points_skipped = main.iter().chain(reference).map(|e| e.skipped).sum();
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub entries: Vec<Entry>,
    /// Literature values, checked numerically but kept apart.
    pub reference: Vec<Entry>,
    pub general: Vec<GeneralCheck>,
    pub summary: Summary,
}

impl Report {
    pub fn new(cfg: &RunConfig, entries: Vec<Entry>, reference: Vec<Entry>, general: Vec<GeneralCheck>, summary: Summary) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: "harmid".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            config: cfg.clone(),
            entries,
            reference,
            general,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let timed = self.entries.iter().chain(&self.reference).any(|e| e.wall_ms.is_some());
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(out, "# harmid verification report\n");
        let _ = writeln!(out, "harmid {} (schema {})\n", self.version, self.schema_version);
        let _ = writeln!(
            out,
            "digits {}, truncation {}, tail order {}, tolerance floor {:e}, seed {:#x}\n",
            c.digits, c.trunc_n, c.tail_order, c.tol, c.seed
        );
        let s = &self.summary;
        let _ = writeln!(
            out,
            "**{} identities: {} pass, {} fail, {} skipped** ({} points, {} skipped)\n",
            s.identities, s.pass, s.fail, s.skipped, s.points, s.points_skipped
        );
        let table = |out: &mut String, rows: &[Entry]| {
            let _ = write!(out, "| id | class | points | status | worst abs delta | error bound | method | anchor |");
            let _ = writeln!(out, "{}", if timed { " ms |" } else { "" });
            let _ = write!(out, "|---|---|---|---|---|---|---|---|");
            let _ = writeln!(out, "{}", if timed { "---|" } else { "" });
            for e in rows {
                let _ = write!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    e.id,
                    e.class.short(),
                    e.points,
                    status_cell(e),
                    num(e.worst_delta),
                    num(e.error_bound),
                    e.methods.join(", "),
                    e.anchor.replace('|', "\\|"),
                );
                let _ = writeln!(out, "{}", if timed { format!(" {:.0} |", e.wall_ms.unwrap_or(0.0)) } else { String::new() });
            }
            out.push('\n');
        };
        if !self.entries.is_empty() {
            let _ = writeln!(out, "## Identities\n");
            table(&mut out, &self.entries);
        }
        if !self.reference.is_empty() {
            let _ = writeln!(out, "## Reference values\n");
            table(&mut out, &self.reference);
        }
        if !self.general.is_empty() {
            let _ = writeln!(out, "## General identities\n");
            let _ = writeln!(out, "| id | check | sizes | trials | status |\n|---|---|---|---|---|");
            for g in &self.general {
                let _ = writeln!(out, "| {} | {} | {} | {} | {} |", g.id, g.description, g.sizes, g.trials, g.status.name());
            }
            out.push('\n');
        }
        let failures: Vec<&Entry> = self.entries.iter().chain(&self.reference).filter(|e| e.first_failure.is_some()).collect();
        if !failures.is_empty() {
            let _ = writeln!(out, "## Failures\n");
            for e in failures {
                let f = e.first_failure.as_ref().expect("filtered");
                let _ = writeln!(
                    out,
                    "- {} at `{}`: lhs {}, rhs {}, delta {}, tolerance {:e}",
                    e.id,
                    f.point,
                    f.lhs.as_deref().unwrap_or("-"),
                    f.rhs.as_deref().unwrap_or("-"),
                    num(f.delta),
                    f.tolerance
                );
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, e: &Entry| {
            let _ = write!(
                out,
                "{:7} {:14} {:>6} pts  worst {:>9}  bound {:>9}",
                e.status.name().to_uppercase(),
                e.id,
                e.points,
                num(e.worst_delta),
                num(e.error_bound)
            );
            if e.skipped > 0 {
                let _ = write!(out, "  ({} skipped)", e.skipped);
            }
            if let Some(ms) = e.wall_ms {
                let _ = write!(out, "  {ms:.0} ms");
            }
            out.push('\n');
            if let Some(f) = &e.first_failure {
                let _ = writeln!(
                    out,
                    "        at {}: lhs {} rhs {}",
                    if f.point.is_empty() { "-" } else { &f.point },
                    f.lhs.as_deref().unwrap_or("-"),
                    f.rhs.as_deref().unwrap_or("-")
                );
            }
        };
        for e in &self.entries {
            line(&mut out, e);
        }
        if !self.reference.is_empty() {
            out.push_str("reference values:\n");
            for e in &self.reference {
                line(&mut out, e);
            }
        }
        if !self.general.is_empty() {
            out.push_str("general identities:\n");
            for g in &self.general {
                let _ = writeln!(out, "{:7} {:14} {} trials ({})", g.status.name().to_uppercase(), g.id, g.trials, g.sizes);
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} identities: {} pass, {} fail, {} skipped", s.identities, s.pass, s.fail, s.skipped);
        out
    }
}

fn status_cell(e: &Entry) -> String {
    if e.skipped > 0 && e.status != Status::Skipped {
        format!("{} ({} skipped)", e.status.name(), e.skipped)
    } else {
        e.status.name().to_string()
    }
}

fn num(v: Option<f64>) -> String {
    match v {
        None => "-".into(),
        Some(x) if x == 0.0 => "0".into(),
        Some(x) => format!("{x:.2e}"),
    }
}
