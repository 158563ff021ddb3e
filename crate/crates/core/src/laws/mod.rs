//! Seeded randomized verification of the complete-number laws.
//!
//! Every trial derives its operands from `(seed, trial_index)` alone, so
//! trials run in parallel and still produce byte-identical reports.

mod gen;
mod report;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{CompleteNumber, Mode};
use crate::error::{Error, Result};
use crate::exact::Complex;
use crate::index::Index;

pub use gen::{gen_complete, gen_complex, gen_index, gen_rational, trial_rng, TrialRng, PRNG_NAME};
pub use report::{reports_to_json, suite_passed, LawReport, LawStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u64,
    /// Largest |numerator| and denominator of generated rationals.
    pub magnitude_bound: u32,
    pub mode: Mode,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: u64, magnitude_bound: u32, mode: Mode) -> Result<Self> {
        if magnitude_bound == 0 {
            return Err(Error::InvalidConfig("magnitude bound must be at least 1".into()));
        }
        Ok(TrialConfig {
            seed,
            trials,
            magnitude_bound,
            mode,
        })
    }
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 42,
            trials: 10_000,
            magnitude_bound: 10,
            mode: Mode::Strict,
        }
    }
}

/// The laws checked by [`run_suite`], in suite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `Ψ1 + Ψ2 = Ψ2 + Ψ1`
    AddComm,
    /// `Ψ1 + (Ψ2 + Ψ3) = (Ψ1 + Ψ2) + Ψ3`
    AddAssoc,
    /// `Ψ1(Ψ2Ψ3) = (Ψ1Ψ2)Ψ3`
    MulAssoc,
    /// `Ψ1(Ψ2 + Ψ3) = Ψ1Ψ2 + Ψ1Ψ3`
    LeftDistrib,
    /// Some pair has `Ψ1Ψ2 ≠ Ψ2Ψ1`; `(↑1, ↓1)` always does.
    MulNoncomm,
    /// `Ψ2 × (Ψ1 ÷ Ψ2) = Ψ1` whenever the divisor's part-sum is nonzero.
    DivRoundtrip,
    /// `(Ψ2 + Ψ3)Ψ1 = Ψ2Ψ1 + Ψ3Ψ1`
    RightDistrib,
    /// The part-sum is additive and multiplicative.
    ShadowHom,
    /// Any `E` with part-sum 1 is a left identity.
    LeftIdentityFamily,
    /// `a × b = b` for indices.
    IndexRightProjection,
}

impl Law {
    pub const ALL: [Law; 10] = [
        Law::AddComm,
        Law::AddAssoc,
        Law::MulAssoc,
        Law::LeftDistrib,
        Law::MulNoncomm,
        Law::DivRoundtrip,
        Law::RightDistrib,
        Law::ShadowHom,
        Law::LeftIdentityFamily,
        Law::IndexRightProjection,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::AddComm => "add_comm",
            Law::AddAssoc => "add_assoc",
            Law::MulAssoc => "mul_assoc",
            Law::LeftDistrib => "left_distrib",
            Law::MulNoncomm => "mul_noncomm",
            Law::DivRoundtrip => "div_roundtrip",
            Law::RightDistrib => "right_distrib",
            Law::ShadowHom => "shadow_hom",
            Law::LeftIdentityFamily => "left_identity_family",
            Law::IndexRightProjection => "index_right_projection",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|law| law.id() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_owned()))
    }
}

/// Outcome of a single trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trial {
    Held,
    /// The trial's precondition did not hold (e.g. a singular divisor).
    Skipped,
    Violated,
}

impl From<bool> for Trial {
    fn from(held: bool) -> Self {
        if held {
            Trial::Held
        } else {
            Trial::Violated
        }
    }
}

/// Renders operands as `psi1 = ...; psi2 = ...`.
pub fn render_operands(operands: &[CompleteNumber]) -> String {
    operands
        .iter()
        .enumerate()
        .map(|(i, p)| format!("psi{} = {p}", i + 1))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Runs a universal law: `generate` draws the operands for one trial and
/// `check` decides it. The first violating trial (by index) becomes the
/// counterexample.
pub fn check_universal<G, C>(law_id: &str, config: &TrialConfig, generate: G, check: C) -> LawReport
where
    G: Fn(&mut TrialRng, u32) -> Vec<CompleteNumber> + Sync,
    C: Fn(&[CompleteNumber]) -> Trial + Sync,
{
    if config.trials == 0 {
        return LawReport::vacuous(law_id, config.seed);
    }
    let outcomes: Vec<(Trial, Vec<CompleteNumber>)> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            let operands = generate(&mut rng, config.magnitude_bound);
            (check(&operands), operands)
        })
        .collect();

    let skipped = outcomes.iter().filter(|(o, _)| *o == Trial::Skipped).count() as u64;
    let violation = outcomes.iter().find(|(o, _)| *o == Trial::Violated);
    let mut report = LawReport::new(law_id, config.seed, config.trials);
    report.skipped = skipped;
    match violation {
        Some((_, operands)) => {
            report.status = LawStatus::Fail;
            report.counterexample = Some(render_operands(operands));
        }
        None => report.status = LawStatus::Pass,
    }
    report
}

fn operands(n: usize) -> impl Fn(&mut TrialRng, u32) -> Vec<CompleteNumber> + Sync {
    move |rng, bound| (0..n).map(|_| gen_complete(rng, bound)).collect()
}

pub fn check_law(law_id: &str, config: &TrialConfig) -> Result<LawReport> {
    let law: Law = law_id.parse()?;
    Ok(run_law(law, config))
}

pub fn run_law(law: Law, config: &TrialConfig) -> LawReport {
    let id = law.id();
    match law {
        Law::AddComm => check_universal(id, config, operands(2), |o| {
            (&o[0] + &o[1] == &o[1] + &o[0]).into()
        }),
        Law::AddAssoc => check_universal(id, config, operands(3), |o| {
            (&o[0] + &(&o[1] + &o[2]) == &(&o[0] + &o[1]) + &o[2]).into()
        }),
        Law::MulAssoc => check_universal(id, config, operands(3), |o| {
            (&o[0] * &(&o[1] * &o[2]) == &(&o[0] * &o[1]) * &o[2]).into()
        }),
        Law::LeftDistrib => check_universal(id, config, operands(3), |o| {
            (&o[0] * &(&o[1] + &o[2]) == &(&o[0] * &o[1]) + &(&o[0] * &o[2])).into()
        }),
        Law::RightDistrib => check_universal(id, config, operands(3), |o| {
            let lhs = &(&o[1] + &o[2]) * &o[0];
            let rhs = &o[1].expanded_mul(&o[0]) + &o[2].expanded_mul(&o[0]);
            (lhs == rhs).into()
        }),
        Law::DivRoundtrip => check_universal(id, config, operands(2), |o| {
            match o[0].checked_div(&o[1]) {
                Ok(quotient) => (&o[1] * &quotient == o[0]).into(),
                Err(_) if o[1].shadow().is_zero() => Trial::Skipped,
                Err(_) => Trial::Violated,
            }
        }),
        Law::ShadowHom => check_universal(id, config, operands(2), |o| {
            let (sp, sq) = (o[0].shadow(), o[1].shadow());
            let additive = (&o[0] + &o[1]).shadow() == &sp + &sq;
            let product = &sp * &sq;
            let multiplicative = (&o[0] * &o[1]).shadow() == product
                && o[0].expanded_mul(&o[1]).shadow() == product;
            (additive && multiplicative).into()
        }),
        Law::LeftIdentityFamily => check_universal(
            id,
            config,
            |rng, bound| {
                let vast = gen_complex(rng, bound);
                let calp = &Complex::one() - &vast;
                vec![CompleteNumber::new(vast, calp), gen_complete(rng, bound)]
            },
            |o| (&o[0] * &o[1] == o[1]).into(),
        ),
        Law::MulNoncomm => check_noncommutativity(config),
        Law::IndexRightProjection => check_index_projection(config),
    }
}

/// Non-commutativity is an existence claim. The fixed pair `(↑1, ↓1)` must
/// not commute, every random pair must have products with equal part-sums,
/// and random non-commuting pairs are counted as extra witnesses.
fn check_noncommutativity(config: &TrialConfig) -> LawReport {
    let id = Law::MulNoncomm.id();
    if config.trials == 0 {
        return LawReport::vacuous(id, config.seed);
    }
    let mut report = LawReport::new(id, config.seed, config.trials);

    let outcomes: Vec<(bool, bool, Vec<CompleteNumber>)> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            let p = gen_complete(&mut rng, config.magnitude_bound);
            let q = gen_complete(&mut rng, config.magnitude_bound);
            let (pq, qp) = (&p * &q, &q * &p);
            (pq.shadow() == qp.shadow(), pq != qp, vec![p, q])
        })
        .collect();
    report.witnesses = outcomes.iter().filter(|(_, w, _)| *w).count() as u64;

    if let Some((_, _, pair)) = outcomes.iter().find(|(shadow_eq, _, _)| !shadow_eq) {
        report.status = LawStatus::Fail;
        report.counterexample = Some(render_operands(pair));
        return report;
    }

    let up = CompleteNumber::new(Complex::one(), Complex::zero());
    let down = CompleteNumber::new(Complex::zero(), Complex::one());
    let (pq, qp) = (&up * &down, &down * &up);
    report.status = if pq != qp && pq == down && qp == up {
        LawStatus::WitnessFound
    } else {
        LawStatus::Fail
    };
    report.counterexample = Some(format!(
        "{}; psi1*psi2 = {pq}; psi2*psi1 = {qp}",
        render_operands(&[up.clone(), down.clone()])
    ));
    report
}

fn check_index_projection(config: &TrialConfig) -> LawReport {
    let id = Law::IndexRightProjection.id();
    if config.trials == 0 {
        return LawReport::vacuous(id, config.seed);
    }
    let violation = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            let (a, b, c) = (gen_index(&mut rng), gen_index(&mut rng), gen_index(&mut rng));
            let holds = a * b == b && (a * b) * c == a * (b * c);
            (holds, [a, b, c])
        })
        .find_first(|(holds, _)| !holds);

    let exhaustive = Index::ALL
        .iter()
        .all(|&a| Index::ALL.iter().all(|&b| a * b == b));

    let mut report = LawReport::new(id, config.seed, config.trials);
    match violation {
        Some((_, [a, b, c])) => {
            report.status = LawStatus::Fail;
            report.counterexample = Some(format!("a = {a}; b = {b}; c = {c}"));
        }
        None if !exhaustive => report.status = LawStatus::Fail,
        None => report.status = LawStatus::Pass,
    }
    report
}

/// Runs every law in [`Law::ALL`] order.
pub fn run_suite(config: &TrialConfig) -> Vec<LawReport> {
    Law::ALL.iter().map(|&law| run_law(law, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(trials: u64) -> TrialConfig {
        TrialConfig::new(42, trials, 10, Mode::Strict).unwrap()
    }

    #[test]
    fn law_ids_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.id().parse::<Law>().unwrap(), law);
        }
        assert_eq!(
            check_law("mul_comm", &config(1)).unwrap_err(),
            Error::UnknownLaw("mul_comm".into())
        );
    }

    #[test]
    fn zero_bound_rejected() {
        assert!(TrialConfig::new(1, 1, 0, Mode::Strict).is_err());
    }

    #[test]
    fn zero_trials_is_vacuous() {
        for report in run_suite(&config(0)) {
            assert_eq!(report.status, LawStatus::Vacuous);
            assert_eq!(report.trials_run, 0);
            assert!(report.counterexample.is_none());
        }
    }

    #[test]
    fn noncommutativity_reports_fixed_pair() {
        let report = check_law("mul_noncomm", &config(200)).unwrap();
        assert_eq!(report.status, LawStatus::WitnessFound);
        let ce = report.counterexample.unwrap();
        assert!(ce.contains("psi1 = up(1) + down(0)"));
        assert!(ce.contains("psi2 = up(0) + down(1)"));
        assert!(ce.contains("psi1*psi2 = up(0) + down(1)"));
        assert!(ce.contains("psi2*psi1 = up(1) + down(0)"));
        assert!(report.witnesses > 0);
    }

    #[test]
    fn div_roundtrip_counts_singular_divisors() {
        // bound 1 makes cancelling part-sums common
        let cfg = TrialConfig::new(3, 500, 1, Mode::Strict).unwrap();
        let report = check_law("div_roundtrip", &cfg).unwrap();
        assert_eq!(report.status, LawStatus::Pass);
        assert!(report.skipped > 0);
        assert!(report.skipped < 500);
    }

    #[test]
    fn false_law_yields_counterexample() {
        let report = check_universal("mul_comm", &config(100), operands(2), |o| {
            (&o[0] * &o[1] == &o[1] * &o[0]).into()
        });
        assert_eq!(report.status, LawStatus::Fail);
        assert!(report.counterexample.unwrap().starts_with("psi1 = "));
    }
}
