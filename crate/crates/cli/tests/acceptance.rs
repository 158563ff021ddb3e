//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use complete_numbers::expr::{evaluate, format};
use complete_numbers::laws::{
    gen_complete, gen_complex, gen_index, reports_to_json, run_suite, trial_rng, LawStatus,
    TrialConfig,
};
use complete_numbers::{CompleteNumber, EvalValue, Index, IndexedComplex, Mode};

type Outcome = Result<String, String>;

const GOLDENS: [(&str, &str); 8] = [
    ("up(2+3i)+up(5+7i)", "up(7+10i)"),
    ("up(5+5i)-up(5+5i)", "up(0)"),
    ("up(3+5i)*up(4+7i)", "up(-23+41i)"),
    ("up(25+25i)/up(4+3i)", "up(7+1i)"),
    ("|up(3+4i)|", "up(5)"),
    ("1/0", "down(1)"),
    ("down(0)/down(1)", "up(1)"),
    ("down(1)/down(0)", "void"),
];

const SUITE_TIME_LIMIT: Duration = Duration::from_secs(30);
const GOLDEN_TIME_LIMIT: Duration = Duration::from_secs(1);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn render_goldens(mode: Mode) -> Vec<String> {
    GOLDENS
        .iter()
        .map(|(src, _)| match evaluate(src, mode) {
            Ok(v) => format(&v),
            Err(e) => format!("error: {e}"),
        })
        .collect()
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let got = render_goldens(Mode::Strict);
    let elapsed = start.elapsed();
    for ((src, want), got) in GOLDENS.iter().zip(&got) {
        ensure(got == want, || format!("{src} gave {got}, expected {want}"))?;
    }
    ensure(elapsed < GOLDEN_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} examples exact in {elapsed:?}", GOLDENS.len()))
}

fn index_tables() -> Outcome {
    use Index::{Calpanic as Down, Vastavic as Up};
    let mul = [
        (Up, Up, Up),
        (Up, Down, Down),
        (Down, Up, Up),
        (Down, Down, Down),
    ];
    for (a, b, want) in mul {
        ensure(a * b == want, || format!("{a} * {b} = {}, expected {want}", a * b))?;
    }
    for (a, want) in [(Up, Up), (Down, Down)] {
        ensure(a.checked_div(a) == Ok(want), || format!("{a} / {a}"))?;
        ensure(a.abs() == want, || format!("|{a}|"))?;
    }
    ensure(Up.checked_div(Down).is_err() && Down.checked_div(Up).is_err(), || {
        "mixed bare division should be refused".into()
    })?;
    Ok("4 products, 2 quotients, 2 moduli".into())
}

fn law_suite(config: &TrialConfig) -> Result<(String, String), String> {
    let start = Instant::now();
    let reports = run_suite(config);
    let elapsed = start.elapsed();
    ensure(reports.len() == 10, || format!("{} reports", reports.len()))?;
    for r in &reports {
        let want = if r.law_id == "mul_noncomm" {
            LawStatus::WitnessFound
        } else {
            LawStatus::Pass
        };
        ensure(r.status == want && r.trials_run == 10_000, || {
            format!("{}: {} after {} trials", r.law_id, r.status, r.trials_run)
        })?;
    }
    let noncomm = reports.iter().find(|r| r.law_id == "mul_noncomm").unwrap();
    let ce = noncomm.counterexample.as_deref().unwrap_or_default();
    for part in [
        "psi1 = up(1) + down(0)",
        "psi2 = up(0) + down(1)",
        "psi1*psi2 = up(0) + down(1)",
        "psi2*psi1 = up(1) + down(0)",
    ] {
        ensure(ce.contains(part), || format!("witness lacks {part:?}: {ce}"))?;
    }
    ensure(elapsed < SUITE_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok((
        format!("9 pass + witness_found in {elapsed:?}"),
        reports_to_json(&reports),
    ))
}

/// ↑(A1A2 + B1A2) + ↓(A1B2 + B1B2), written out term by term.
fn literal_product(p: &CompleteNumber, q: &CompleteNumber) -> CompleteNumber {
    CompleteNumber::new(
        &(&p.vast * &q.vast) + &(&p.calp * &q.vast),
        &(&p.vast * &q.calp) + &(&p.calp * &q.calp),
    )
}

fn factored_vs_expanded() -> Outcome {
    for t in 0..10_000 {
        let mut rng = trial_rng(2024, t);
        let p = gen_complete(&mut rng, 10);
        let q = gen_complete(&mut rng, 10);
        let factored = &p * &q;
        ensure(factored == literal_product(&p, &q) && factored == p.expanded_mul(&q), || {
            format!("pair {t}: {p} and {q}")
        })?;
    }
    Ok("10000 random pairs agree".into())
}

fn mode_divergence(strict_suite: &str) -> Outcome {
    let strict = evaluate("up(0)/up(1)", Mode::Strict).map(|v| format(&v));
    let lenient = evaluate("up(0)/up(1)", Mode::Lenient).map(|v| format(&v));
    ensure(strict.as_deref() == Ok("void"), || format!("strict gave {strict:?}"))?;
    ensure(lenient.as_deref() == Ok("up(0)"), || format!("lenient gave {lenient:?}"))?;
    ensure(render_goldens(Mode::Strict) == render_goldens(Mode::Lenient), || {
        "goldens differ across modes".into()
    })?;
    let lenient_suite = reports_to_json(&run_suite(&TrialConfig {
        mode: Mode::Lenient,
        ..TrialConfig::default()
    }));
    ensure(lenient_suite == strict_suite, || "suite reports differ across modes".into())?;
    Ok("only up(0)/up(1) differs".into())
}

fn round_trip() -> Outcome {
    for t in 0..1_000u64 {
        let mut rng = trial_rng(77, t);
        let v = if t % 2 == 0 {
            EvalValue::Pure(IndexedComplex::new(gen_index(&mut rng), gen_complex(&mut rng, 25)))
        } else {
            EvalValue::Full(gen_complete(&mut rng, 25))
        };
        let text = format(&v);
        let back = evaluate(&text, Mode::Strict);
        ensure(back.as_ref() == Ok(&v), || format!("{text} re-evaluated to {back:?}"))?;
    }
    Ok("1000 values (500 pure, 500 full)".into())
}

fn reproducibility() -> Outcome {
    let dir = std::env::temp_dir().join(format!("complete-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for run in 0..2 {
        let path = dir.join(format!("run{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_complete"))
            .args(["laws", "--trials", "10000", "--seed", "42", "--json", "--out"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || format!("run {run} exited {:?}", status.status))?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(files[0] == files[1], || "report files differ".into())?;
    Ok(format!("two runs byte-identical ({} bytes)", files[0].len()))
}

fn main() {
    let mut failures = 0;
    let mut report = |id: &str, name: &str, outcome: Outcome| {
        match outcome {
            Ok(detail) => println!("[PASS] AC{id} {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] AC{id} {name}: {why}");
            }
        }
    };

    report("1", "worked-example goldens", worked_examples());
    report("2", "index tables", index_tables());
    let suite = law_suite(&TrialConfig::default());
    let strict_json = suite.as_ref().map(|(_, json)| json.clone()).ok();
    report("3", "law suite (seed 42, 10000 trials, bound 10)", suite.map(|(s, _)| s));
    report("4", "factored vs expanded multiplication", factored_vs_expanded());
    report(
        "5",
        "strict/lenient divergence",
        strict_json
            .ok_or_else(|| "strict suite did not complete".to_string())
            .and_then(|json| mode_divergence(&json)),
    );
    report("6", "format/parse/eval round trip", round_trip());
    report("7", "laws --json reproducibility", reproducibility());

    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 7 acceptance criteria passed");
}
