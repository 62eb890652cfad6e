//! The invariant suite behind `ellsum verify`.
//!
//! Each check sweeps a parameter box and stops at the first counterexample.
//! Checks are independent, so callers may run them in any order or in
//! parallel; [`run_all`] runs them in sequence.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::bernoulli::{
    bernoulli_number, bernoulli_numbers, check_binom_bernoulli_identity, is_squarefree, vsc_denominator,
    BernoulliTable,
};
use crate::classifier::{
    classify_with_profile, instance_profile, obstruction_case1, obstruction_case2, z_value, ForbiddenPattern,
    Verdict,
};
use crate::exactnum::{vp, ExactRational};
use crate::powersum::{build, degree1_coefficient, degree2_coefficient, direct_sum, top_coefficients, ProblemInstance};
use crate::rootstructure::{contradiction_identities, multiplicity_profile, two_root_hypothetical};
use crate::search::find_solutions;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub k_max: u32,
    pub l_max: u32,
    pub n_max: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { k_max: 20, l_max: 10, n_max: 50 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckOutcome {
    pub name: String,
    /// Number of individual cases examined.
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(&VerifyConfig) -> CheckOutcome,
}

impl Check {
    pub fn run(&self, config: &VerifyConfig) -> CheckOutcome {
        (self.run)(config)
    }
}

/// Counts cases and records the first failure.
struct Tally {
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self { cases: 0, counterexample: None }
    }

    /// Records one case; returns false once a failure has been seen.
    fn case(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) -> bool {
        if self.counterexample.is_some() {
            return false;
        }
        self.cases += 1;
        match outcome {
            Ok(true) => true,
            Ok(false) => {
                self.counterexample = Some(describe());
                false
            }
            Err(e) => {
                self.counterexample = Some(format!("{}: {e}", describe()));
                false
            }
        }
    }

    fn finish(self, name: &str) -> CheckOutcome {
        CheckOutcome { name: name.to_string(), cases: self.cases, counterexample: self.counterexample }
    }
}

fn instances(k_lo: u32, config: &VerifyConfig) -> impl Iterator<Item = ProblemInstance> + '_ {
    (k_lo..=config.k_max).flat_map(move |k| {
        (2..=config.l_max).filter_map(move |l| ProblemInstance::new(k, l).ok())
    })
}

fn check_bernoulli(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    let top = (config.k_max as usize + 1).max(2);
    t.case(Ok(bernoulli_number(1) == ExactRational::new(-1, 2).expect("literal")), || "B_1".into());
    t.case(Ok(bernoulli_number(2) == ExactRational::new(1, 6).expect("literal")), || "B_2".into());
    t.case(BernoulliTable::validate(&bernoulli_numbers(top)).map(|_| true), || "table".into());
    for k in (2..=top).step_by(2) {
        let b = bernoulli_number(k);
        let ok = vsc_denominator(k as u64).map(|d| {
            b.denom() == &BigInt::from(d) && is_squarefree(b.denom()) && vp(&b, 2) == Ok(-1)
        });
        if !t.case(ok, || format!("denominator of B_{k}")) {
            break;
        }
    }
    for k in 2..=top {
        if !t.case(Ok(check_binom_bernoulli_identity(k)), || format!("binomial identity at k={k}")) {
            break;
        }
    }
    t.finish("bernoulli")
}

fn check_oracle(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    'outer: for inst in instances(1, config) {
        let poly = build(inst);
        for x in 1..=10u64 {
            let ok = poly.sum_at(x) == ExactRational::from(direct_sum(inst, x));
            if !t.case(Ok(ok), || format!("S({x}) for {inst}")) {
                break 'outer;
            }
        }
    }
    t.finish("oracle-equivalence")
}

fn check_coefficients(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for inst in instances(2, config) {
        let low = if inst.exponent() % 2 == 0 {
            degree1_coefficient(inst)
        } else {
            degree2_coefficient(inst)
        };
        let ok = top_coefficients(inst).and(low).map(|_| true);
        if !t.case(ok, || format!("coefficients of H for {inst}")) {
            break;
        }
    }
    t.finish("coefficient-formulas")
}

fn check_three_roots(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for inst in instances(2, config) {
        let ok = multiplicity_profile(inst).and_then(|p| {
            let h = two_root_hypothetical(inst)?;
            Ok(p.distinct_count >= 3 && h.interval_ok && h.inequality_ok)
        });
        if !t.case(ok, || format!("root structure for {inst}")) {
            break;
        }
    }
    let l_max = (config.l_max as u64).max(100);
    t.case(Ok(contradiction_identities(l_max)), || format!("branch identities up to l={l_max}"));
    t.finish("three-distinct-roots")
}

fn check_z_congruence(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    'outer: for k in (3..=config.k_max).step_by(2) {
        for l in (3..=config.l_max).step_by(2) {
            if !t.case(z_value(k, l).map(|z| z.congruence_ok), || format!("z at k={k} l={l}")) {
                break 'outer;
            }
        }
    }
    t.finish("z-congruence")
}

fn check_obstructions(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    'outer: for inst in instances(2, config) {
        let k = inst.exponent();
        let odd_l = inst.multiplier() % 2 == 1;
        for n in 2..=config.n_max.max(2) {
            let report = if k % 2 == 0 {
                obstruction_case1(inst, n)
            } else if k >= 3 && odd_l {
                obstruction_case2(inst, n)
            } else {
                continue;
            };
            let ok = report.map(|r| r.obstructed && r.v2 == -1);
            if !t.case(ok, || format!("obstruction for {inst} n={n}")) {
                break 'outer;
            }
        }
    }
    t.finish("2-adic-obstructions")
}

fn check_classification(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    'outer: for inst in instances(2, config) {
        if inst.exponent() == 3 {
            continue;
        }
        let profile = match instance_profile(inst) {
            Ok(p) => p,
            Err(e) => {
                t.case(Err(e), || format!("profile of {inst}"));
                break;
            }
        };
        for n in 2..=config.n_max.max(2) {
            let ok = classify_with_profile(inst, n, profile.clone())
                .map(|r| r.verdict == Verdict::FiniteByBrindza);
            if !t.case(ok, || format!("classification of {inst} n={n}")) {
                break 'outer;
            }
        }
    }
    if config.k_max >= 3 {
        let inst = ProblemInstance::new(3, 2).expect("valid");
        let ok = crate::classifier::classify(inst, 2).map(|r| {
            r.verdict == Verdict::ExcludedK
                && r.witnesses.t_values.values() == [1, 2, 2]
                && r.witnesses.pattern.pattern == Some(ForbiddenPattern::B)
        });
        t.case(ok, || "pattern B witness at k=3 l=2 n=2".into());
    }
    t.finish("classification")
}

fn check_search(config: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    'outer: for inst in instances(1, config) {
        for s in find_solutions(inst, 10, None) {
            let ok = direct_sum(inst, s.x) == Pow::pow(&s.y, s.n);
            if !t.case(Ok(ok), || format!("solution ({} {} {}) for {inst}", s.x, s.y, s.n)) {
                break 'outer;
            }
        }
    }
    t.finish("search-soundness")
}

/// The suite, in reporting order.
pub fn checks() -> &'static [Check] {
    &[
        Check { name: "bernoulli", run: check_bernoulli },
        Check { name: "oracle-equivalence", run: check_oracle },
        Check { name: "coefficient-formulas", run: check_coefficients },
        Check { name: "three-distinct-roots", run: check_three_roots },
        Check { name: "z-congruence", run: check_z_congruence },
        Check { name: "2-adic-obstructions", run: check_obstructions },
        Check { name: "classification", run: check_classification },
        Check { name: "search-soundness", run: check_search },
    ]
}

pub fn run_all(config: &VerifyConfig) -> Vec<CheckOutcome> {
    checks().iter().map(|c| c.run(config)).collect()
}
