//! Corpus-level theorem verification. Every group is analysed once, on a
//! worker pool, and all requested checks run against that analysis.

use std::time::Instant;

use cdlat_core::theorems::{check, Outcome, TheoremId};
use cdlat_core::{Analysis, Group};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{HarnessError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub group: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn summary_line(&self) -> String {
        format!(
            "{:<10} {} checked={} violations={}",
            self.theorem,
            if self.pass { "PASS" } else { "FAIL" },
            self.checked,
            self.violations.len()
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub jobs: Option<usize>,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: None, timing: true }
    }
}

pub fn parse_ids(spec: &str) -> Result<Vec<TheoremId>> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    spec.split(',')
        .map(|s| s.trim().parse::<TheoremId>().map_err(|e| HarnessError::Usage(e.to_string())))
        .collect()
}

pub(crate) fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| HarnessError::Usage(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn run_group(ids: &[TheoremId], g: &Group) -> Vec<Outcome> {
    match Analysis::new(g) {
        Ok(a) => ids
            .iter()
            .map(|&id| check(id, &a).unwrap_or_else(|e| Outcome::Violation(format!("error: {e}"))))
            .collect(),
        Err(e) => vec![Outcome::Violation(format!("analysis failed: {e}")); ids.len()],
    }
}

/// One report per id, in the order given. Violations are sorted by group
/// name, so the output does not depend on scheduling.
pub fn verify(ids: &[TheoremId], groups: &[Group], opts: VerifyOptions) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let outcomes: Vec<Vec<Outcome>> =
        with_pool(opts.jobs, || groups.par_iter().map(|g| run_group(ids, g)).collect())?;
    let elapsed_ms = if opts.timing { start.elapsed().as_millis() as u64 } else { 0 };

    let reports = ids
        .iter()
        .enumerate()
        .map(|(k, id)| {
            let mut checked = 0;
            let mut violations = Vec::new();
            for (g, out) in groups.iter().zip(&outcomes) {
                match &out[k] {
                    Outcome::NotApplicable => {}
                    Outcome::Pass => checked += 1,
                    Outcome::Violation(detail) => {
                        checked += 1;
                        violations.push(Violation { group: g.label().to_string(), detail: detail.clone() });
                    }
                }
            }
            violations.sort_by(|a, b| (&a.group, &a.detail).cmp(&(&b.group, &b.detail)));
            VerificationReport {
                theorem: id.as_str().to_string(),
                checked,
                pass: violations.is_empty(),
                violations,
                elapsed_ms,
            }
        })
        .collect();
    Ok(reports)
}
