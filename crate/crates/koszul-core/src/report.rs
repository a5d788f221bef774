//! Machine-readable run reports shared by the CLI and the browser demo.
//!
//! Field order is fixed by the struct declarations, so serialization is
//! byte-stable for a fixed input.

use serde::Serialize;

use crate::koszul::{HomologyReport, VerdictBundle};

/// Echo of the run configuration.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub field: String,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub degree: usize,
    pub order: String,
    pub max_steps: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpotReport {
    pub p: usize,
    pub zero: bool,
    pub cover_rank: usize,
    pub relations: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ControlReport {
    pub name: String,
    pub exact: bool,
    pub spots: Vec<SpotReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The full report of a `verify-paper` or `homology` run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub spots: Vec<SpotReport>,
    pub certificate: Option<String>,
    pub chain_ok: Option<bool>,
    pub rigid: bool,
    pub counterexample_absent: Option<bool>,
    pub steps: Vec<StepReport>,
    pub controls: Vec<ControlReport>,
    pub elapsed_ms: u64,
}

pub fn spot_reports(report: &HomologyReport) -> Vec<SpotReport> {
    report
        .spots
        .iter()
        .map(|s| SpotReport {
            p: s.p,
            zero: s.is_zero,
            cover_rank: s.cover_rank,
            relations: s.relation_count,
            witness: s.witness_string.clone(),
        })
        .collect()
}

impl Report {
    pub fn from_homology(config: ConfigEcho, report: &HomologyReport) -> Self {
        Report {
            config,
            spots: spot_reports(report),
            certificate: None,
            chain_ok: None,
            rigid: report.rigid,
            counterexample_absent: None,
            steps: Vec::new(),
            controls: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn from_verdict(config: ConfigEcho, bundle: &VerdictBundle) -> Self {
        Report {
            config,
            spots: spot_reports(&bundle.report),
            certificate: bundle.certificate_value.clone(),
            chain_ok: bundle.chain.as_ref().map(|c| c.pairwise_equal),
            rigid: bundle.report.rigid,
            counterexample_absent: bundle.counterexample_absent,
            steps: bundle
                .steps
                .iter()
                .map(|s| StepReport {
                    name: s.name.clone(),
                    passed: s.passed,
                    detail: s.detail.clone(),
                })
                .collect(),
            controls: bundle
                .controls
                .iter()
                .map(|c| ControlReport {
                    name: c.name.clone(),
                    exact: c.exact,
                    spots: spot_reports(&c.report),
                })
                .collect(),
            elapsed_ms: 0,
        }
    }
}
