//! Brute-force search for solutions `(x, y, n)` inside a finite box.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::exactnum::{integer_nth_root, ExactRational};
use crate::powersum::{build, direct_sum, ProblemInstance};

/// `direct_sum(instance, x) = y^n` with `x, y >= 1`, `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SolutionTriple {
    pub x: u64,
    #[cfg_attr(feature = "serde", serde(serialize_with = "crate::serde_str::serialize"))]
    pub y: BigUint,
    pub n: u32,
}

/// All triples with this `x`, one per exponent `n` (not collapsed to the
/// largest). Exponents run from 2 to `floor(log2 N)`, capped by `n_max`.
pub fn solutions_at(instance: ProblemInstance, x: u64, n_max: Option<u32>) -> Vec<SolutionTriple> {
    let value = direct_sum(instance, x);
    // x >= 1 and l >= 2 give at least one term >= 2, so N = 1 never occurs.
    assert!(x == 0 || value > BigUint::one(), "sum is at least 2 for x >= 1");
    let log2 = value.bits().saturating_sub(1) as u32;
    let top = n_max.map_or(log2, |m| m.min(log2));
    (2..=top)
        .filter_map(|n| {
            let (root, exact) = integer_nth_root(&value, n).expect("n >= 2");
            exact.then_some(SolutionTriple { x, y: root, n })
        })
        .collect()
}

/// Every solution with `1 <= x <= x_max`, sorted by `(x, n)`.
pub fn find_solutions(instance: ProblemInstance, x_max: u64, n_max: Option<u32>) -> Vec<SolutionTriple> {
    (1..=x_max).flat_map(|x| solutions_at(instance, x, n_max)).collect()
}

/// `S(x)` agrees with literal summation for every `x` in `1..=x_max`.
pub fn cross_check_polynomial(instance: ProblemInstance, x_max: u64) -> bool {
    let poly = build(instance);
    (1..=x_max).all(|x| poly.sum_at(x) == ExactRational::from(direct_sum(instance, x)))
}
