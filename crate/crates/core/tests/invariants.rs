use std::collections::BTreeMap;
use std::thread;

use ellsum_core::bernoulli::{bernoulli_number, BernoulliTable};
use ellsum_core::classifier::{
    classify, obstruction_case1, obstruction_case2, pattern_check, t_values, ForbiddenPattern, TValues, Verdict,
};
use ellsum_core::exactnum::{rational_nth_power_root, ExactRational};
use ellsum_core::powersum::{build, direct_sum};
use ellsum_core::rootstructure::{squarefree_decomposition, MultiplicityProfile};
use ellsum_core::search::{find_solutions, SolutionTriple};
use ellsum_core::{ProblemInstance, RationalPolynomial};
use num_bigint::BigUint;
use proptest::prelude::*;

fn inst(k: u32, l: u32) -> ProblemInstance {
    ProblemInstance::new(k, l).unwrap()
}

fn naive_solutions(instance: ProblemInstance, x_max: u64) -> Vec<(u64, u64, u32)> {
    let mut out = Vec::new();
    for x in 1..=x_max {
        let value = direct_sum(instance, x);
        let mut hits = Vec::new();
        let mut y = 2u64;
        while BigUint::from(y * y) <= value {
            let mut power = BigUint::from(y * y);
            let mut n = 2;
            while power < value {
                power *= y;
                n += 1;
            }
            if power == value {
                hits.push((x, y, n));
            }
            y += 1;
        }
        hits.sort_by_key(|&(_, _, n)| n);
        out.extend(hits);
    }
    out
}

fn plain(found: &[SolutionTriple]) -> Vec<(u64, u64, u32)> {
    found.iter().map(|s| (s.x, s.y.to_string().parse().unwrap(), s.n)).collect()
}

#[test]
fn search_matches_naive_double_loop() {
    for k in 1..=4 {
        for l in 2..=4 {
            let found = plain(&find_solutions(inst(k, l), 15, None));
            assert_eq!(found, naive_solutions(inst(k, l), 15), "k={k} l={l}");
        }
    }
}

#[test]
fn search_reports_every_exponent_of_a_perfect_power() {
    // x = 1 leaves the single term 2^6 = 8^2 = 4^3
    let found = plain(&find_solutions(inst(6, 2), 1, None));
    assert_eq!(found, [(1, 8, 2), (1, 4, 3), (1, 2, 6)]);
}

#[test]
fn larger_box_finds_second_linear_solution() {
    let found = plain(&find_solutions(inst(1, 2), 1000, None));
    assert_eq!(found, [(8, 10, 2), (800, 980, 2)]);
}

#[test]
fn growing_the_box_only_adds_solutions() {
    for (k, l) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
        let small = find_solutions(inst(k, l), 20, None);
        let large = find_solutions(inst(k, l), 60, None);
        assert_eq!(&large[..small.len()], &small[..], "k={k} l={l}");
        assert!(large[small.len()..].iter().all(|s| s.x > 20));
    }
}

#[test]
fn concurrent_bernoulli_readers_agree_with_fresh_table() {
    let mut fresh = BernoulliTable::new();
    fresh.extend_to(80);
    let expected = fresh.values().to_vec();
    let handles: Vec<_> = (0..8)
        .map(|t| thread::spawn(move || (0..=80).rev().skip(t).map(bernoulli_number).collect::<Vec<_>>()))
        .collect();
    for (t, h) in handles.into_iter().enumerate() {
        let mut got = h.join().unwrap();
        got.reverse();
        assert_eq!(got, expected[..got.len()], "thread {t}");
    }
}

#[test]
fn obstruction_targets_are_never_perfect_powers() {
    for k in (2..=20).step_by(2) {
        for l in 2..=10 {
            let target = obstruction_case1(inst(k, l), 2).unwrap().target;
            for n in 2..=10 {
                assert!(rational_nth_power_root(&target, n).is_none(), "k={k} l={l} n={n}");
            }
        }
    }
    for k in (3..=19).step_by(2) {
        for l in (3..=9).step_by(2) {
            let target = obstruction_case2(inst(k, l), 2).unwrap().target;
            for n in 2..=10 {
                assert!(rational_nth_power_root(&target, n).is_none(), "k={k} l={l} n={n}");
            }
        }
    }
}

#[test]
fn polynomial_matches_summation_beyond_the_acceptance_grid() {
    for (k, l) in [(21, 2), (25, 11), (30, 3)] {
        let poly = build(inst(k, l));
        for x in [1, 7, 40] {
            assert_eq!(poly.sum_at(x), ExactRational::from(direct_sum(inst(k, l), x)), "k={k} l={l} x={x}");
        }
    }
}

#[test]
fn excluded_exponents_never_claim_finiteness() {
    for l in 2..=6 {
        for n in 2..=12 {
            assert_eq!(classify(inst(1, l), n).unwrap().verdict, Verdict::ExcludedK);
            assert_eq!(classify(inst(3, l), n).unwrap().verdict, Verdict::ExcludedK);
        }
    }
}

fn from_roots(roots: &BTreeMap<i64, u32>, scale: i64) -> RationalPolynomial {
    let mut p = RationalPolynomial::constant(ExactRational::from(scale));
    for (&r, &m) in roots {
        let factor = RationalPolynomial::from_integers([-r, 1]).pow(m);
        p = &p * &factor;
    }
    p
}

proptest! {
    #[test]
    fn pattern_check_ignores_order(mut ts in prop::collection::vec(1u32..6, 1..8), seed in any::<u64>()) {
        let before = pattern_check(&TValues(ts.clone()));
        let len = ts.len();
        ts.rotate_left((seed as usize) % len);
        if seed % 2 == 0 {
            ts.reverse();
        }
        prop_assert_eq!(pattern_check(&TValues(ts)), before);
    }

    #[test]
    fn pattern_shapes(t in 2u32..20, ones in 0usize..6) {
        let mut ts = vec![1; ones];
        ts.push(t);
        prop_assert_eq!(pattern_check(&TValues(ts.clone())).pattern, Some(ForbiddenPattern::A(t)));
        ts.push(2);
        let expected = if t == 2 { Some(ForbiddenPattern::B) } else { None };
        prop_assert_eq!(pattern_check(&TValues(ts)).pattern, expected);
    }

    #[test]
    fn t_values_divide_n(ms in prop::collection::vec(1u32..8, 1..6), n in 2u32..60) {
        let profile = MultiplicityProfile::new(ms, 0);
        let ts = t_values(&profile, n);
        for (&t, &m) in ts.values().iter().zip(&profile.multiplicities) {
            prop_assert_eq!(n % t, 0);
            prop_assert_eq!((m * t) % n, 0);
        }
    }

    #[test]
    fn squarefree_round_trip(
        roots in prop::collection::btree_map(-6i64..7, 1u32..4, 1..5),
        scale in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
    ) {
        let p = from_roots(&roots, scale);
        let dec = squarefree_decomposition(&p).unwrap();
        prop_assert_eq!(dec.expand(), p.clone());

        let mut expected: Vec<u32> = roots.values().copied().collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        let profile = MultiplicityProfile::of_polynomial(&p).unwrap();
        prop_assert_eq!(&profile.multiplicities, &expected);
        prop_assert_eq!(profile.zero_multiplicity, roots.get(&0).copied().unwrap_or(0));
        for (f, m) in &dec.factors {
            let count = roots.values().filter(|&&r| r == *m).count();
            prop_assert_eq!(f.degree(), Some(count));
        }
    }

    #[test]
    fn direct_sum_is_additive_in_the_range(k in 1u32..6, l in 2u32..6, x in 1u64..30) {
        // sum over (x, lx] = sum over [1, lx] - sum over [1, x]
        let prefix = |n: u64| (1..=n).map(|j| BigUint::from(j).pow(k)).sum::<BigUint>();
        prop_assert_eq!(direct_sum(inst(k, l), x), prefix(l as u64 * x) - prefix(x));
    }
}
