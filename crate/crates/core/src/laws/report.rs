use std::fmt;

use serde::{Deserialize, Serialize};

use super::gen::PRNG_NAME;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LawStatus {
    Pass,
    Fail,
    WitnessFound,
    Vacuous,
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            LawStatus::Pass => "pass",
            LawStatus::Fail => "fail",
            LawStatus::WitnessFound => "witness_found",
            LawStatus::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law_id: String,
    pub status: LawStatus,
    pub trials_run: u64,
    pub seed: u64,
    /// Operands in canonical text, present whenever the status is `fail`.
    pub counterexample: Option<String>,
    /// Trials whose precondition failed.
    pub skipped: u64,
    /// Random non-commuting pairs found (non-commutativity only).
    pub witnesses: u64,
    pub prng: String,
}

impl LawReport {
    pub(super) fn new(law_id: &str, seed: u64, trials_run: u64) -> Self {
        LawReport {
            law_id: law_id.to_owned(),
            status: LawStatus::Pass,
            trials_run,
            seed,
            counterexample: None,
            skipped: 0,
            witnesses: 0,
            prng: PRNG_NAME.to_owned(),
        }
    }

    pub(super) fn vacuous(law_id: &str, seed: u64) -> Self {
        LawReport {
            status: LawStatus::Vacuous,
            ..LawReport::new(law_id, seed, 0)
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status != LawStatus::Fail
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<24} {:<14} trials={} seed={}",
            self.law_id, self.status, self.trials_run, self.seed
        )?;
        if self.skipped > 0 {
            write!(f, " skipped={}", self.skipped)?;
        }
        if self.witnesses > 0 {
            write!(f, " witnesses={}", self.witnesses)?;
        }
        if let Some(ce) = &self.counterexample {
            write!(f, "\n    {ce}")?;
        }
        Ok(())
    }
}

/// True when no law failed.
pub fn suite_passed(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::is_ok)
}

pub fn reports_to_json(reports: &[LawReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}
