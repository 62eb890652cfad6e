//! Rayon-backed versions of the sweeps. Each returns exactly what the
//! sequential core routine returns, in the same order.

use ellsum_core::classifier::{classify_with_profile, instance_profile, ClassificationReport};
use ellsum_core::search::{solutions_at, SolutionTriple};
use ellsum_core::verify::{checks, CheckOutcome, VerifyConfig};
use ellsum_core::{ProblemInstance, Result};
use rayon::prelude::*;

/// Parallel over `x`; sorted by `(x, n)` like the sequential search.
pub fn find_solutions(instance: ProblemInstance, x_max: u64, n_max: Option<u32>) -> Vec<SolutionTriple> {
    let mut found: Vec<SolutionTriple> = (1..=x_max)
        .into_par_iter()
        .flat_map_iter(|x| solutions_at(instance, x, n_max))
        .collect();
    found.sort_by_key(|a| (a.x, a.n));
    found
}

/// One report per `n` in `2..=n_max`, sharing a single profile computation.
pub fn classify_range(instance: ProblemInstance, n_max: u32) -> Result<Vec<ClassificationReport>> {
    let profile = instance_profile(instance)?;
    (2..=n_max)
        .into_par_iter()
        .map(|n| classify_with_profile(instance, n, profile.clone()))
        .collect()
}

pub fn verify(config: &VerifyConfig) -> Vec<CheckOutcome> {
    checks().par_iter().map(|c| c.run(config)).collect()
}
