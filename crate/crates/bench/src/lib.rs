//! Shared operands for the benchmarks.

use complete_numbers::laws::{gen_complete, trial_rng};
use complete_numbers::CompleteNumber;

/// `n` reproducible complete numbers with parts bounded by `bound`.
pub fn sample(n: usize, bound: u32) -> Vec<CompleteNumber> {
    (0..n as u64)
        .map(|t| gen_complete(&mut trial_rng(0xbe7c4, t), bound))
        .collect()
}
