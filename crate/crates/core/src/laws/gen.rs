use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::CompleteNumber;
use crate::exact::{Complex, Rational};
use crate::index::Index;

pub type TrialRng = ChaCha8Rng;

/// Recorded in every report so a run can be replayed elsewhere.
pub const PRNG_NAME: &str = "chacha8 (seed_from_u64(seed), stream = trial index)";

/// The generator for one trial: seeded from `seed`, on its own stream.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `|numerator| ≤ bound`, `1 ≤ denominator ≤ bound`.
pub fn gen_rational(rng: &mut TrialRng, bound: u32) -> Rational {
    let bound = i64::from(bound.max(1));
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num, den)
}

pub fn gen_complex(rng: &mut TrialRng, bound: u32) -> Complex {
    let re = gen_rational(rng, bound);
    let im = gen_rational(rng, bound);
    Complex { re, im }
}

pub fn gen_complete(rng: &mut TrialRng, bound: u32) -> CompleteNumber {
    let vast = gen_complex(rng, bound);
    let calp = gen_complex(rng, bound);
    CompleteNumber::new(vast, calp)
}

pub fn gen_index(rng: &mut TrialRng) -> Index {
    if rng.gen() {
        Index::Vastavic
    } else {
        Index::Calpanic
    }
}
