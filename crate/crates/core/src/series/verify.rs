//! Checking registry identities at grid points.

use serde::Serialize;

use crate::numerics::PrecisionContext;
use crate::registry::{IdentityClass, IdentityRecord, ParameterGrid};
use crate::sumlang::{eval_exact_batch, eval_real, Bindings, BoundKind, EvalReport};

use super::SeriesPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationResult {
    pub id: String,
    /// Parameter values, e.g. `N=3, n=2`; empty when there are none.
    pub point: String,
    /// Digits of the numeric context; `None` for exact checks.
    pub digits: Option<u32>,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub delta: Option<f64>,
    pub tolerance: f64,
    pub error_bound: Option<f64>,
    pub bound_kind: Option<String>,
    pub method: Option<String>,
    pub reason: Option<String>,
}

pub fn format_point(b: &Bindings) -> String {
    b.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

impl VerificationResult {
    fn skipped(id: &str, point: String, digits: Option<u32>, reason: String) -> Self {
        VerificationResult {
            id: id.to_string(),
            point,
            digits,
            status: Status::Skipped,
            lhs: None,
            rhs: None,
            delta: None,
            tolerance: 0.0,
            error_bound: None,
            bound_kind: None,
            method: None,
            reason: Some(reason),
        }
    }
}

/// Exact check of a finite identity at every grid point; zero tolerance.
pub fn verify_finite(record: &IdentityRecord, grid: &ParameterGrid) -> Vec<VerificationResult> {
    let points = grid.points();
    if record.class != IdentityClass::FiniteExact {
        return points
            .iter()
            .map(|b| VerificationResult::skipped(&record.id, format_point(b), None, "not a finite identity".into()))
            .collect();
    }
    let lhs = eval_exact_batch(&record.lhs, &points);
    let rhs = eval_exact_batch(&record.rhs, &points);
    points
        .iter()
        .zip(lhs.into_iter().zip(rhs))
        .map(|(b, (l, r))| {
            let point = format_point(b);
            match (l, r) {
                (Ok(l), Ok(r)) => {
                    let delta = (&l - &r).abs().to_f64();
                    VerificationResult {
                        id: record.id.clone(),
                        point,
                        digits: None,
                        status: if l == r { Status::Pass } else { Status::Fail },
                        lhs: Some(l.to_string()),
                        rhs: Some(r.to_string()),
                        delta: Some(delta),
                        tolerance: 0.0,
                        error_bound: Some(0.0),
                        bound_kind: Some(BoundKind::Rigorous.name().to_string()),
                        method: Some("exact".into()),
                        reason: None,
                    }
                }
                (Err(e), _) => VerificationResult::skipped(&record.id, point, None, format!("lhs: {e}")),
                (_, Err(e)) => VerificationResult::skipped(&record.id, point, None, format!("rhs: {e}")),
            }
        })
        .collect()
}

/// Tolerance for a numeric comparison at `digits`.
pub fn numeric_tolerance(digits: u32, l: &EvalReport, r: &EvalReport, policy: &SeriesPolicy) -> f64 {
    let base = 10f64.powi(-(digits as i32 - 10)).max(2.0 * (l.error_bound + r.error_bound));
    if l.bound_kind == BoundKind::Heuristic || r.bound_kind == BoundKind::Heuristic {
        base.max(policy.tol_floor)
    } else {
        base
    }
}

/// Numeric check over the record's numeric grid.
pub fn verify_numeric(record: &IdentityRecord, ctx: PrecisionContext, policy: &SeriesPolicy) -> Vec<VerificationResult> {
    verify_numeric_on(record, &record.numeric_grid(), ctx, policy)
}

pub fn verify_numeric_on(
    record: &IdentityRecord,
    grid: &ParameterGrid,
    ctx: PrecisionContext,
    policy: &SeriesPolicy,
) -> Vec<VerificationResult> {
    let digits = ctx.digits();
    grid.points()
        .into_iter()
        .map(|b| {
            let point = format_point(&b);
            let l = eval_real(&record.lhs, &b, ctx, policy);
            let r = eval_real(&record.rhs, &b, ctx, policy);
            match (l, r) {
                (Ok(l), Ok(r)) => {
                    let delta = (&l.value - &r.value).abs().to_f64();
                    let tol = numeric_tolerance(digits, &l, &r, policy);
                    let kind = l.bound_kind.max(r.bound_kind);
                    VerificationResult {
                        id: record.id.clone(),
                        point,
                        digits: Some(digits),
                        status: if delta <= tol { Status::Pass } else { Status::Fail },
                        lhs: Some(l.value.to_decimal_string(digits as usize)),
                        rhs: Some(r.value.to_decimal_string(digits as usize)),
                        delta: Some(delta),
                        tolerance: tol,
                        error_bound: Some(l.error_bound + r.error_bound),
                        bound_kind: Some(kind.name().to_string()),
                        method: Some(l.method.max(r.method).name().to_string()),
                        reason: None,
                    }
                }
                (Err(e), _) => VerificationResult::skipped(&record.id, point, Some(digits), format!("lhs: {e}")),
                (_, Err(e)) => VerificationResult::skipped(&record.id, point, Some(digits), format!("rhs: {e}")),
            }
        })
        .collect()
}

/// Exact check for finite records, numeric for the rest.
pub fn verify_record(record: &IdentityRecord, ctx: PrecisionContext, policy: &SeriesPolicy) -> Vec<VerificationResult> {
    match record.class {
        IdentityClass::FiniteExact => verify_finite(record, &record.default_grid()),
        _ => verify_numeric(record, ctx, policy),
    }
}
