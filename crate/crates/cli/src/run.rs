//! The verification run behind `verify` and `report`.

use std::time::Instant;

use harmid_core::registry::{registry, IdentityClass, IdentityRecord, ParameterGrid, RegistryError};
use harmid_core::series::{verify_finite, verify_numeric_on, Status, VerificationResult};
use harmid_core::sumlang::{Bindings, Expr};
use harmid_oracle::{check_corollaries, check_master_identity, RandomSequenceSpec};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::report::{Entry, GeneralCheck, PointDetail, Report, Summary};

/// Records selected by the filter, in id order. Unknown ids are an error.
pub fn select(cfg: &RunConfig) -> Result<Vec<&'static IdentityRecord>, RegistryError> {
    let reg = registry();
    for id in &cfg.filter.ids {
        reg.lookup(id)?;
    }
    Ok(reg.enumerate(None).into_iter().filter(|r| cfg.filter.accepts(&r.id, r.class)).collect())
}

fn with_fault(rec: &IdentityRecord) -> IdentityRecord {
    let mut out = rec.clone();
    out.rhs = Expr::Add(Box::new(out.rhs.clone()), Box::new(Expr::int(1)));
    out
}

fn summarize(rec: &IdentityRecord, results: &[VerificationResult], wall_ms: Option<f64>) -> Entry {
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    let status = if failed > 0 {
        Status::Fail
    } else if passed == 0 {
        Status::Skipped
    } else {
        Status::Pass
    };
    let checked: Vec<&VerificationResult> = results.iter().filter(|r| r.status != Status::Skipped).collect();
    let worst = checked
        .iter()
        .copied()
        .max_by(|a, b| {
            let ra = a.delta.unwrap_or(0.0) / a.tolerance.max(f64::MIN_POSITIVE);
            let rb = b.delta.unwrap_or(0.0) / b.tolerance.max(f64::MIN_POSITIVE);
            ra.total_cmp(&rb)
        });
    let mut methods: Vec<String> = checked.iter().filter_map(|r| r.method.clone()).collect();
    methods.sort();
    methods.dedup();
    let first_failure = results.iter().find(|r| r.status == Status::Fail).map(PointDetail::from);
    let first_skip = results.iter().find(|r| r.status == Status::Skipped).map(PointDetail::from);
    Entry {
        id: rec.id.clone(),
        class: rec.class,
        anchor: rec.anchor.clone(),
        points: results.len(),
        passed,
        failed,
        skipped,
        status,
        worst_delta: checked.iter().filter_map(|r| r.delta).fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d)))),
        tolerance: worst.map(|r| r.tolerance),
        error_bound: checked.iter().filter_map(|r| r.error_bound).fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d)))),
        methods,
        first_failure,
        first_skip,
        wall_ms,
    }
}

/// Randomized exact checks of the double-sum rearrangement and its corollaries.
pub fn general_checks(seed: u64) -> Vec<GeneralCheck> {
    let trials = 100u64;
    let master: Vec<bool> = (1..=20usize)
        .into_par_iter()
        .map(|n| {
            (0..trials).all(|t| {
                let s = seed.wrapping_add(1_000 * n as u64 + t);
                check_master_identity(&RandomSequenceSpec::new(n, s).matrix())
            })
        })
        .collect();
    let corollaries: Vec<bool> = (1..=25usize)
        .into_par_iter()
        .map(|n| {
            (0..trials).all(|t| {
                let (g, h) = RandomSequenceSpec::new(n, seed.wrapping_add(1_000_000 + 1_000 * n as u64 + t)).pair();
                check_corollaries(&g, &h)
            })
        })
        .collect();
    let status = |v: &[bool]| if v.iter().all(|&b| b) { Status::Pass } else { Status::Fail };
    vec![
        GeneralCheck {
            id: "G.MASTER".into(),
            description: "double-sum rearrangement on random rational matrices".into(),
            sizes: "N=1..20".into(),
            trials: trials as usize * master.len(),
            status: status(&master),
        },
        GeneralCheck {
            id: "G.COROLLARIES".into(),
            description: "symmetric, factorable, square and partial-sum corollaries on random sequences".into(),
            sizes: "N=1..25".into(),
            trials: trials as usize * corollaries.len(),
            status: status(&corollaries),
        },
    ]
}

/// Runs every selected check on `cfg.jobs` threads and assembles the report.
/// The report does not depend on the thread count.
pub fn run(cfg: &RunConfig) -> Result<Report, RegistryError> {
    let records = select(cfg)?;
    let owned: Vec<IdentityRecord> = records
        .iter()
        .map(|r| if cfg.inject_fault.as_deref() == Some(r.id.as_str()) { with_fault(r) } else { (*r).clone() })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().expect("thread pool");
    pool.install(|| {
        // finite records go as one task so their grid shares harmonic tables
        let tasks: Vec<(usize, Option<Bindings>)> = owned
            .iter()
            .enumerate()
            .flat_map(|(i, r)| -> Vec<(usize, Option<Bindings>)> {
                if r.class == IdentityClass::FiniteExact {
                    vec![(i, None)]
                } else {
                    r.numeric_grid().points().into_iter().map(|p| (i, Some(p))).collect()
                }
            })
            .collect();
        let results: Vec<(usize, Vec<VerificationResult>, f64)> = tasks
            .par_iter()
            .map(|(i, p)| {
                let t = Instant::now();
                let rec = &owned[*i];
                let r = match p {
                    None => verify_finite(rec, &rec.default_grid()),
                    Some(p) => verify_numeric_on(rec, &ParameterGrid::single(p), cfg.ctx(), &cfg.policy()),
                };
                (*i, r, t.elapsed().as_secs_f64() * 1e3)
            })
            .collect();
        let mut per: Vec<(Vec<VerificationResult>, f64)> = vec![(Vec::new(), 0.0); owned.len()];
        for (i, r, ms) in results {
            per[i].0.extend(r);
            per[i].1 += ms;
        }
        let entries: Vec<Entry> = owned
            .iter()
            .zip(per)
            .map(|(rec, (res, ms))| summarize(rec, &res, cfg.timings.then_some(ms)))
            .collect();
        let general = if cfg.filter.is_empty() { general_checks(cfg.seed) } else { Vec::new() };
        let (reference, main): (Vec<Entry>, Vec<Entry>) =
            entries.into_iter().partition(|e| e.class == IdentityClass::Reference);
        let summary = Summary::tally(&main, &reference, &general);
        Ok(Report::new(cfg, main, reference, general, summary))
    })
}
