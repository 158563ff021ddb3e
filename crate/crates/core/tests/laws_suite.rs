use complete_numbers::expr::evaluate;
use complete_numbers::laws::{
    check_law, check_universal, reports_to_json, run_suite, suite_passed, trial_rng, gen_complete,
    LawStatus, TrialConfig, Trial,
};
use complete_numbers::{CompleteNumber, EvalValue, Mode};

fn parse_operands(text: &str) -> Vec<CompleteNumber> {
    text.split("; ")
        .map(|part| {
            let (_, expr) = part.split_once(" = ").expect("name = value");
            match evaluate(expr, Mode::Strict).unwrap() {
                EvalValue::Full(p) => p,
                other => panic!("expected a complete number, got {other}"),
            }
        })
        .collect()
}

#[test]
fn default_suite_passes() {
    let config = TrialConfig {
        trials: 2_000,
        ..TrialConfig::default()
    };
    let reports = run_suite(&config);
    assert_eq!(reports.len(), 10);
    for r in &reports {
        let expected = if r.law_id == "mul_noncomm" {
            LawStatus::WitnessFound
        } else {
            LawStatus::Pass
        };
        assert_eq!(r.status, expected, "{r}");
    }
    assert!(suite_passed(&reports));
}

#[test]
fn add_comm_at_reference_config() {
    let report = check_law("add_comm", &TrialConfig::new(42, 10_000, 10, Mode::Strict).unwrap()).unwrap();
    assert_eq!(report.status, LawStatus::Pass);
    assert_eq!(report.trials_run, 10_000);
}

#[test]
fn div_roundtrip_at_reference_config() {
    let report =
        check_law("div_roundtrip", &TrialConfig::new(7, 10_000, 10, Mode::Strict).unwrap()).unwrap();
    assert_eq!(report.status, LawStatus::Pass);
    assert!(report.skipped < report.trials_run);
}

#[test]
fn modes_do_not_affect_suite() {
    let strict = TrialConfig {
        trials: 500,
        ..TrialConfig::default()
    };
    let lenient = TrialConfig {
        mode: Mode::Lenient,
        ..strict
    };
    assert_eq!(
        reports_to_json(&run_suite(&strict)),
        reports_to_json(&run_suite(&lenient))
    );
}

#[test]
fn reports_are_reproducible() {
    let config = TrialConfig {
        seed: 1234,
        trials: 800,
        magnitude_bound: 4,
        mode: Mode::Strict,
    };
    assert_eq!(
        reports_to_json(&run_suite(&config)),
        reports_to_json(&run_suite(&config))
    );
}

#[test]
fn counterexamples_replay() {
    let config = TrialConfig {
        trials: 300,
        ..TrialConfig::default()
    };
    let law = |o: &[CompleteNumber]| Trial::from(&o[0] * &o[1] == &o[1] * &o[0]);
    let report = check_universal(
        "mul_comm",
        &config,
        |rng, bound| vec![gen_complete(rng, bound), gen_complete(rng, bound)],
        law,
    );
    assert_eq!(report.status, LawStatus::Fail);
    let operands = parse_operands(report.counterexample.as_deref().unwrap());
    assert_eq!(operands.len(), 2);
    assert_eq!(law(&operands), Trial::Violated);

    // The reported pair is the first violating trial.
    let first = (0..config.trials)
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            vec![gen_complete(&mut rng, 10), gen_complete(&mut rng, 10)]
        })
        .find(|o| law(o) == Trial::Violated)
        .unwrap();
    assert_eq!(operands, first);
}

#[test]
fn json_shape() {
    let config = TrialConfig {
        trials: 10,
        ..TrialConfig::default()
    };
    let json = reports_to_json(&run_suite(&config));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let arr = value.as_array().unwrap();
    assert_eq!(arr.len(), 10);
    for obj in arr {
        for key in ["law_id", "status", "trials_run", "seed", "counterexample", "prng"] {
            assert!(obj.get(key).is_some(), "missing {key}");
        }
    }
    assert_eq!(arr[0]["law_id"], "add_comm");
    assert!(arr[0]["counterexample"].is_null());
    assert_eq!(arr[4]["status"], "witness_found");
}
