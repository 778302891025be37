//! Runs the claim table over a graph stream.

use rayon::prelude::*;
use serde::Serialize;

use super::stream::{StreamItem, StreamSpec};
use crate::error::Result;
use crate::theorems::{ClaimContext, ClaimId, ClaimOutcome, Status};
use crate::Limits;

/// Graphs evaluated per parallel batch; results are merged in stream order.
pub const CHUNK: usize = 2048;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub claims: Vec<ClaimId>,
    /// Abort at the first failing claim (the default).
    pub stop_on_fail: bool,
    pub limits: Limits,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            claims: ClaimId::ALL.to_vec(),
            stop_on_fail: true,
            limits: Limits::from_env(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim_id: String,
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub graphs: usize,
    pub tallies: Vec<ClaimTally>,
    pub failures: usize,
    pub first_failure: Option<ClaimOutcome>,
    pub stopped_early: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the suite; `on_outcome` sees every outcome in stream order.
pub fn run_suite_with(
    spec: &StreamSpec,
    opts: &SuiteOptions,
    mut on_outcome: impl FnMut(&ClaimOutcome),
) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        graphs: 0,
        tallies: opts
            .claims
            .iter()
            .map(|c| ClaimTally {
                claim_id: c.as_str().to_owned(),
                ..ClaimTally::default()
            })
            .collect(),
        failures: 0,
        first_failure: None,
        stopped_early: false,
    };
    let mut stream = spec.iter()?;
    loop {
        let chunk: Vec<StreamItem> = stream.by_ref().take(CHUNK).collect::<Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<Vec<ClaimOutcome>>> = chunk
            .par_iter()
            .map(|it| ClaimContext::new(&it.graph, &opts.limits)?.evaluate_all(&opts.claims))
            .collect();
        for outcomes in results {
            let outcomes = outcomes?;
            report.graphs += 1;
            let mut failed = false;
            for (t, o) in report.tallies.iter_mut().zip(&outcomes) {
                on_outcome(o);
                match o.status {
                    Status::Holds => t.holds += 1,
                    Status::NotApplicable => t.not_applicable += 1,
                    Status::Fails => {
                        t.fails += 1;
                        report.failures += 1;
                        failed = true;
                        if report.first_failure.is_none() {
                            report.first_failure = Some(o.clone());
                        }
                    }
                }
            }
            if failed && opts.stop_on_fail {
                report.stopped_early = true;
                return Ok(report);
            }
        }
    }
    Ok(report)
}

pub fn run_suite(spec: &StreamSpec, opts: &SuiteOptions) -> Result<SuiteReport> {
    run_suite_with(spec, opts, |_| {})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_four() {
        let r = run_suite(&StreamSpec::exhaustive(4, 4), &SuiteOptions::default()).unwrap();
        assert_eq!(r.graphs, 64);
        assert!(r.passed(), "{:?}", r.first_failure);
        for t in &r.tallies {
            assert_eq!(t.holds + t.not_applicable, 64, "{}", t.claim_id);
        }
    }

    #[test]
    fn selected_claims_and_callback() {
        let opts = SuiteOptions {
            claims: vec![ClaimId::KerCore, ClaimId::KeDiff],
            ..SuiteOptions::default()
        };
        let mut seen = Vec::new();
        let r = run_suite_with(&StreamSpec::exhaustive(3, 3), &opts, |o| seen.push(o.claim_id)).unwrap();
        assert_eq!(r.tallies.len(), 2);
        assert_eq!(seen.len(), 16);
        assert_eq!(seen[..2], [ClaimId::KerCore, ClaimId::KeDiff]);
        // every graph on 3 vertices except K3 is KE
        assert_eq!(r.tallies[1].holds, 7);
        assert_eq!(r.tallies[1].not_applicable, 1);
    }
}
