use complete_numbers::expr::{evaluate, format};
use complete_numbers::laws::{gen_complete, gen_complex, gen_index, trial_rng};
use complete_numbers::{EvalValue, IndexedComplex, Mode};
use proptest::prelude::*;

fn value() -> impl Strategy<Value = EvalValue> {
    (any::<u64>(), 1u32..=20, any::<bool>()).prop_map(|(seed, bound, pure)| {
        let mut rng = trial_rng(seed, 0);
        if pure {
            EvalValue::Pure(IndexedComplex::new(
                gen_index(&mut rng),
                gen_complex(&mut rng, bound),
            ))
        } else {
            EvalValue::Full(gen_complete(&mut rng, bound))
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn format_parse_eval_round_trip(v in value()) {
        for mode in [Mode::Strict, Mode::Lenient] {
            let text = format(&v);
            prop_assert_eq!(&evaluate(&text, mode).unwrap(), &v, "text {}", text);
        }
    }

    #[test]
    fn evaluation_is_deterministic(v in value()) {
        let text = format(&v);
        let a = format(&evaluate(&text, Mode::Strict).unwrap());
        let b = format(&evaluate(&text, Mode::Strict).unwrap());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn void_renders_as_void() {
    assert_eq!(format(&EvalValue::Void), "void");
}
