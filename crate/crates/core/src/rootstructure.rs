//! Root multiplicities of `H` over the rationals.
//!
//! Multiplicities come from a squarefree decomposition (Yun's algorithm) run
//! on the integer-cleared primitive form of the polynomial. A squarefree
//! factor of degree `d` and multiplicity `e` contributes `d` distinct complex
//! roots, each of multiplicity `e`, so no root finding is needed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use spin::RwLock;

use crate::exactnum::ExactRational;
use crate::poly::{IntPolynomial, RationalPolynomial};
use crate::powersum::{build, ProblemInstance};
use crate::{Error, Result};

/// `p = leading_coefficient * prod factor_i ^ multiplicity_i`, with monic,
/// squarefree, pairwise coprime factors listed by increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub leading_coefficient: ExactRational,
    pub factors: Vec<(RationalPolynomial, u32)>,
}

impl SquarefreeDecomposition {
    /// Multiplies everything back out.
    pub fn expand(&self) -> RationalPolynomial {
        self.factors.iter().fold(
            RationalPolynomial::constant(self.leading_coefficient.clone()),
            |acc, (f, e)| &acc * &f.pow(*e),
        )
    }
}

fn exact(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial> {
    a.div_exact(b)
        .ok_or_else(|| Error::invariant("inexact division in squarefree decomposition"))
}

pub fn squarefree_decomposition(p: &RationalPolynomial) -> Result<SquarefreeDecomposition> {
    let lc = p.leading_coefficient().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    if p.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { leading_coefficient: lc, factors });
    }

    // Everything below stays in Z[x]; divisors are primitive so every
    // quotient that exists over Q is integral.
    let f = p.to_primitive_integer();
    let fp = f.derivative();
    let c = f.gcd(&fp);
    let mut w = exact(&f, &c)?;
    let mut y = exact(&fp, &c)?;
    let mut z = y.sub(&w.derivative());
    let mut mult = 1u32;
    while w.degree().is_some_and(|d| d > 0) {
        let g = w.gcd(&z);
        if g.degree().is_some_and(|d| d > 0) {
            factors.push((g.to_rational().monic(), mult));
        }
        w = exact(&w, &g)?;
        y = exact(&z, &g)?;
        z = y.sub(&w.derivative());
        mult += 1;
    }
    Ok(SquarefreeDecomposition { leading_coefficient: lc, factors })
}

/// The multiset of root multiplicities of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MultiplicityProfile {
    /// One entry per distinct complex root, sorted descending.
    pub multiplicities: Vec<u32>,
    pub distinct_count: usize,
    /// Multiplicity of 0 as a root (0 if it is not a root).
    pub zero_multiplicity: u32,
}

impl MultiplicityProfile {
    /// Canonicalizes an arbitrary multiset of multiplicities.
    pub fn new(mut multiplicities: Vec<u32>, zero_multiplicity: u32) -> Self {
        multiplicities.sort_unstable_by(|a, b| b.cmp(a));
        let distinct_count = multiplicities.len();
        Self { multiplicities, distinct_count, zero_multiplicity }
    }

    pub fn of_polynomial(p: &RationalPolynomial) -> Result<Self> {
        let decomposition = squarefree_decomposition(p)?;
        let mut multiplicities = Vec::new();
        let mut zero_multiplicity = 0;
        for (factor, e) in &decomposition.factors {
            let d = factor.degree().unwrap_or(0);
            multiplicities.extend(core::iter::repeat_n(*e, d));
            if factor.coefficient(0).is_zero() {
                zero_multiplicity = *e;
            }
        }
        let direct = p.zero_root_multiplicity().unwrap_or(0) as u32;
        if direct != zero_multiplicity {
            return Err(Error::invariant(format!(
                "zero multiplicity {zero_multiplicity} from factors, {direct} from coefficients"
            )));
        }
        Ok(Self::new(multiplicities, zero_multiplicity))
    }

    pub fn total_degree(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Number of roots of multiplicity exactly one.
    pub fn simple_count(&self) -> usize {
        self.multiplicities.iter().filter(|&&r| r == 1).count()
    }

    /// Multiplicities of the roots other than 0.
    pub fn nonzero_root_multiplicities(&self) -> Vec<u32> {
        let mut rest = self.multiplicities.clone();
        if self.zero_multiplicity > 0 {
            if let Some(pos) = rest.iter().position(|&r| r == self.zero_multiplicity) {
                rest.remove(pos);
            }
        }
        rest
    }
}

/// The multiplicity profile of `H` for `k >= 2`, with the structural checks
/// that always hold: multiplicities sum to `k+1`, and 0 is a simple root for
/// even `k` and a double root for odd `k`.
static PROFILES: RwLock<BTreeMap<(u32, u32), MultiplicityProfile>> = RwLock::new(BTreeMap::new());

/// Memoized per `(k, l)`; only profiles that pass the checks are cached.
pub fn multiplicity_profile(instance: ProblemInstance) -> Result<MultiplicityProfile> {
    let key = (instance.exponent(), instance.multiplier());
    if let Some(p) = PROFILES.read().get(&key) {
        return Ok(p.clone());
    }
    let profile = compute_profile(instance)?;
    PROFILES.write().insert(key, profile.clone());
    Ok(profile)
}

fn compute_profile(instance: ProblemInstance) -> Result<MultiplicityProfile> {
    let k = instance.exponent();
    if k < 2 {
        return Err(Error::domain(format!("multiplicity profile needs k >= 2, got {k}")));
    }
    let profile = MultiplicityProfile::of_polynomial(build(instance).scaled())?;
    if profile.total_degree() != k + 1 {
        return Err(Error::invariant(format!(
            "multiplicities of H for {instance} sum to {}, expected {}",
            profile.total_degree(),
            k + 1
        )));
    }
    let expected_zero = if k.is_multiple_of(2) { 1 } else { 2 };
    if profile.zero_multiplicity != expected_zero {
        return Err(Error::invariant(format!(
            "0 has multiplicity {} in H for {instance}, expected {expected_zero}",
            profile.zero_multiplicity
        )));
    }
    Ok(profile)
}

pub fn has_three_distinct_roots(instance: ProblemInstance) -> Result<bool> {
    Ok(multiplicity_profile(instance)?.distinct_count >= 3)
}

/// What the two-distinct-roots hypothesis would force.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwoRootHypothetical {
    /// The multiplicity of 0 implied by matching the top three coefficients
    /// of `H` against `c x^r (x + a)^{k+1-r}`.
    pub r: ExactRational,
    /// `k - 2 < r < k`.
    pub interval_ok: bool,
    /// `(l^k - 1)^2 > (l^{k-1} - 1)(l^{k+1} - 1)`.
    pub inequality_ok: bool,
}

/// Evaluates
/// `r = k (1 - 2AB / (3(k+1)C^2 - 2kAB))` with `A = l^{k-1} - 1`,
/// `B = l^{k+1} - 1`, `C = l^k - 1`.
pub fn two_root_hypothetical(instance: ProblemInstance) -> Result<TwoRootHypothetical> {
    let k = instance.exponent();
    if k < 2 {
        return Err(Error::domain(format!("two-root formula needs k >= 2, got {k}")));
    }
    let a = instance.multiplier_pow_minus_one(k - 1);
    let b = instance.multiplier_pow_minus_one(k + 1);
    let c = instance.multiplier_pow_minus_one(k);
    let kk = BigInt::from(k);
    let ab = &a * &b;
    let denominator = BigInt::from(3 * (k + 1)) * &c * &c - BigInt::from(2) * &kk * &ab;
    if denominator.is_zero() {
        return Err(Error::DegenerateTwoRoot);
    }
    let frac = ExactRational::new(BigInt::from(2) * &ab, denominator)?;
    let kq = ExactRational::from(kk);
    let r = &kq * (ExactRational::one() - frac);
    let interval_ok = r > k as i64 - 2 && r < kq;
    let inequality_ok = &c * &c > ab;
    Ok(TwoRootHypothetical { r, interval_ok, inequality_ok })
}

/// `8(l^2 + l + 1) = 9(l + 1)^2`, which the `r = 1` (k = 2) branch would need.
pub fn simple_zero_branch_holds(ell: u64) -> bool {
    let l = BigInt::from(ell);
    BigInt::from(8) * (&l * &l + &l + 1) == BigInt::from(9) * (&l + 1) * (&l + 1)
}

/// `(l + 1)(l^2 + 1) = (l^2 + l + 1)^2`, which the `r = 2` (k = 3) branch
/// would need.
pub fn double_zero_branch_holds(ell: u64) -> bool {
    let l = BigInt::from(ell);
    let t = &l * &l + &l + 1;
    (&l + 1) * (&l * &l + 1) == &t * &t
}

/// True iff neither branch identity holds for any `l` in `2..=ell_max`.
pub fn contradiction_identities(ell_max: u64) -> bool {
    (2..=ell_max).all(|l| !simple_zero_branch_holds(l) && !double_zero_branch_holds(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    fn inst(k: u32, l: u32) -> ProblemInstance {
        ProblemInstance::new(k, l).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let h = RationalPolynomial::from_integers([0, 0, 3, 14, 15]);
        let d = squarefree_decomposition(&h).unwrap();
        assert_eq!(d.leading_coefficient, q(15, 1));
        assert_eq!(
            d.factors,
            vec![
                (RationalPolynomial::from_coefficients(vec![q(1, 5), q(14, 15), q(1, 1)]), 1),
                (RationalPolynomial::x(), 2),
            ]
        );

        let cube = RationalPolynomial::from_integers([-1, 3, -3, 1]);
        let d = squarefree_decomposition(&cube).unwrap();
        assert_eq!(d.factors, vec![(RationalPolynomial::from_integers([-1, 1]), 3)]);

        let sq_free = RationalPolynomial::from_integers([-1, 0, 1]);
        let d = squarefree_decomposition(&sq_free).unwrap();
        assert_eq!(d.factors, vec![(sq_free.clone(), 1)]);
    }

    #[test]
    fn decomposition_edge_cases() {
        assert_eq!(
            squarefree_decomposition(&RationalPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        let c = RationalPolynomial::constant(q(3, 7));
        let d = squarefree_decomposition(&c).unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.expand(), c);
    }

    #[test]
    fn decomposition_with_rational_coefficients() {
        // (1/3)(x - 1/2)^2 (x + 2)^3 x
        let a = RationalPolynomial::from_coefficients(vec![q(-1, 2), q(1, 1)]);
        let b = RationalPolynomial::from_integers([2, 1]);
        let p = (&(&a.pow(2) * &b.pow(3)) * &RationalPolynomial::x()).scale(&q(1, 3));
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.expand(), p);
        let mults: Vec<u32> = d.factors.iter().map(|(_, e)| *e).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        let profile = MultiplicityProfile::of_polynomial(&p).unwrap();
        assert_eq!(profile.multiplicities, vec![3, 2, 1]);
        assert_eq!(profile.zero_multiplicity, 1);
    }

    #[test]
    fn profile_examples() {
        let p = multiplicity_profile(inst(2, 2)).unwrap();
        assert_eq!((p.multiplicities.as_slice(), p.distinct_count, p.zero_multiplicity), (&[1, 1, 1][..], 3, 1));
        let p = multiplicity_profile(inst(3, 2)).unwrap();
        assert_eq!((p.multiplicities.as_slice(), p.distinct_count, p.zero_multiplicity), (&[2, 1, 1][..], 3, 2));
        assert_eq!(p.nonzero_root_multiplicities(), vec![1, 1]);
        assert!(has_three_distinct_roots(inst(4, 3)).unwrap());
        assert!(multiplicity_profile(inst(1, 2)).is_err());
    }

    #[test]
    fn profile_helpers() {
        let p = MultiplicityProfile::new(vec![1, 4, 2, 1], 2);
        assert_eq!(p.multiplicities, vec![4, 2, 1, 1]);
        assert_eq!(p.simple_count(), 2);
        assert_eq!(p.total_degree(), 8);
        assert_eq!(p.nonzero_root_multiplicities(), vec![4, 1, 1]);
    }

    #[test]
    fn two_root_examples() {
        let t = two_root_hypothetical(inst(2, 2)).unwrap();
        assert_eq!(t.r, q(78, 53));
        assert!(t.interval_ok && t.inequality_ok);
        let t = two_root_hypothetical(inst(3, 2)).unwrap();
        assert_eq!(t.r, q(114, 53));
        assert!(t.interval_ok && t.inequality_ok);
        assert!(two_root_hypothetical(inst(1, 2)).is_err());
    }

    #[test]
    fn branch_identities_match_formula() {
        // r = 1 at k = 2 exactly when the first identity holds, and
        // r = 2 at k = 3 exactly when the second does.
        for l in 2..=60u32 {
            let r2 = two_root_hypothetical(inst(2, l)).unwrap().r;
            assert_eq!(r2 == 1, simple_zero_branch_holds(l as u64));
            assert!(r2 != 1);
            let r3 = two_root_hypothetical(inst(3, l)).unwrap().r;
            assert_eq!(r3 == 2, double_zero_branch_holds(l as u64));
            assert!(r3 != 2);
        }
    }

    #[test]
    fn contradictions() {
        assert!(contradiction_identities(2));
        assert!(contradiction_identities(100));
        assert!(!simple_zero_branch_holds(3));
        // both sides spelled out for l = 2 and l = 3
        assert_eq!((8 * (4 + 2 + 1), 9 * 9), (56, 81));
        assert_eq!((3 * 5, 7 * 7), (15, 49));
        assert_eq!((8 * 13, 9 * 16), (104, 144));
    }

    #[test]
    fn cached_profile_matches_fresh() {
        for (k, l) in [(2, 2), (5, 3), (8, 7)] {
            let i = ProblemInstance::new(k, l).unwrap();
            let first = multiplicity_profile(i).unwrap();
            assert_eq!(first, compute_profile(i).unwrap());
            assert_eq!(multiplicity_profile(i).unwrap(), first);
        }
    }
}
