//! Finiteness decisions for `H(x) = y^n`.
//!
//! Brindza's criterion: with `t_i = n / gcd(n, r_i)` over the distinct roots
//! of `H`, finiteness follows unless the multiset `{t_i}` is `{t, 1, ..., 1}`
//! (any `t >= 1`) or `{2, 2, 1, ..., 1}`. The classifier computes the true
//! profile first and then attaches the 2-adic obstruction arguments as
//! witnesses along the case tree (parity of `k`, divisibility by `n`).

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::bernoulli::bernoulli_number;
use crate::exactnum::{big_pow, binomial, rational_nth_power_root, vp, vp_int, ExactRational};
use crate::powersum::{build, ProblemInstance};
use crate::rootstructure::{multiplicity_profile, MultiplicityProfile};
use crate::{Error, Result};

/// One `t_i = n / gcd(n, r_i)` per distinct root, in profile order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct TValues(pub Vec<u32>);

impl TValues {
    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

pub fn t_values(profile: &MultiplicityProfile, n: u32) -> TValues {
    TValues(profile.multiplicities.iter().map(|&r| n / n.gcd(&r)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ForbiddenPattern {
    /// `{t, 1, ..., 1}`, including the all-ones tuple as `A(1)`.
    A(u32),
    /// `{2, 2, 1, ..., 1}`.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PatternVerdict {
    pub forbidden: bool,
    pub pattern: Option<ForbiddenPattern>,
}

/// Order-independent match against the two exceptional shapes.
pub fn pattern_check(ts: &TValues) -> PatternVerdict {
    let non_one: Vec<u32> = ts.0.iter().copied().filter(|&t| t != 1).collect();
    let pattern = match non_one.as_slice() {
        [] => Some(ForbiddenPattern::A(1)),
        [t] => Some(ForbiddenPattern::A(*t)),
        [2, 2] => Some(ForbiddenPattern::B),
        _ => None,
    };
    PatternVerdict { forbidden: pattern.is_some(), pattern }
}

/// What the Schinzel–Tijdeman results give for `f(x) = y^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum SchinzelTijdemanStatus {
    /// At least two distinct roots: `n` is bounded.
    BoundedN,
    /// Three or more simple roots: finitely many solutions with `n > 1`.
    FinitelyManyAboveN1,
    /// Exactly two simple roots: finitely many solutions with `n > 2`.
    FinitelyManyAboveN2,
    /// Fewer than two distinct roots.
    NotApplicable,
}

pub fn schinzel_tijdeman_status(profile: &MultiplicityProfile) -> SchinzelTijdemanStatus {
    if profile.distinct_count < 2 {
        return SchinzelTijdemanStatus::NotApplicable;
    }
    match profile.simple_count() {
        0 | 1 => SchinzelTijdemanStatus::BoundedN,
        2 => SchinzelTijdemanStatus::FinitelyManyAboveN2,
        _ => SchinzelTijdemanStatus::FinitelyManyAboveN1,
    }
}

/// Branches of the case analysis. `Case1*` is even `k`, `Case2*` odd `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ProofCase {
    /// `k` even, `n` does not divide `k`.
    Case1i,
    /// `k` even, `n | k`.
    Case1ii,
    /// `k` odd, `n | (k - 1)`.
    Case2i,
    Case2iiN3,
    Case2iiN4,
    /// `k` odd, `n` does not divide `k - 1`, `n > 4`.
    Case2iiNBig,
}

pub fn proof_case(k: u32, n: u32) -> ProofCase {
    if k.is_multiple_of(2) {
        if k.is_multiple_of(n) {
            ProofCase::Case1ii
        } else {
            ProofCase::Case1i
        }
    } else if (k - 1).is_multiple_of(n) {
        ProofCase::Case2i
    } else {
        match n {
            3 => ProofCase::Case2iiN3,
            4 => ProofCase::Case2iiN4,
            _ => ProofCase::Case2iiNBig,
        }
    }
}

/// A candidate value of `a_0^e`, where `a_0` is the constant term of a
/// hypothetical rational `f` with `H / x^z = c f^e`, and its 2-adic valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ObstructionReport {
    pub target: ExactRational,
    pub v2: i64,
    /// The power `target` would have to be.
    pub exponent: u32,
    /// `v2 == -1`, so `target` is no `exponent`-th power of a rational.
    pub obstructed: bool,
    pub detail: ProofCase,
}

fn require_no_root(target: &ExactRational, exponent: u32, instance: ProblemInstance) -> Result<()> {
    if rational_nth_power_root(target, exponent).is_some() {
        return Err(Error::invariant(format!(
            "obstruction target {target} for {instance} is a perfect {exponent}-th power"
        )));
    }
    Ok(())
}

/// Even `k`: `target = (k+1)(l-1)B_k / (l^{k+1} - 1)`.
///
/// Since `k+1` is odd, `l^{k+1} - 1 = (l - 1)(l^k + ... + 1)` with an odd
/// second factor, so `v2(l^{k+1} - 1) = v2(l - 1)` and `v2(target) = v2(B_k) = -1`.
pub fn obstruction_case1(instance: ProblemInstance, n: u32) -> Result<ObstructionReport> {
    let k = instance.exponent();
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::domain(format!("even-exponent obstruction needs even k >= 2, got {k}")));
    }
    if n < 2 {
        return Err(Error::domain(format!("n must be >= 2, got {n}")));
    }
    let ell_minus_one = BigInt::from(instance.multiplier() - 1);
    let lead = instance.multiplier_pow_minus_one(k + 1);
    if vp_int(&lead, 2)? != vp_int(&ell_minus_one, 2)? {
        return Err(Error::invariant(format!(
            "v2(l^(k+1) - 1) != v2(l - 1) for {instance}"
        )));
    }
    let target = ExactRational::from(BigInt::from(k + 1) * ell_minus_one)
        * bernoulli_number(k as usize)
        / ExactRational::from(lead);
    let v2 = vp(&target, 2)?;
    let obstructed = v2 == -1;
    if obstructed {
        require_no_root(&target, n, instance)?;
    }
    Ok(ObstructionReport { target, v2, exponent: n, obstructed, detail: ProofCase::Case1ii })
}

/// `z = 1 + l^2 + l^4 + ... + l^{k-1}` together with `e = v2((k+1)/2)` and
/// whether `z = (k+1)/2 (mod 2^{e+1})`, which forces `v2(z) = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ZValue {
    #[cfg_attr(feature = "serde", serde(serialize_with = "crate::serde_str::serialize"))]
    pub z: BigInt,
    pub e: u32,
    pub congruence_ok: bool,
}

pub fn z_value(k: u32, ell: u32) -> Result<ZValue> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!("z needs odd k >= 3, got {k}")));
    }
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::domain(format!("z needs odd l >= 3, got {ell}")));
    }
    let l2 = BigInt::from(big_pow(ell as u64, 2));
    let mut z = BigInt::from(0);
    let mut term = BigInt::from(1);
    for _ in 0..=(k - 1) / 2 {
        z += &term;
        term *= &l2;
    }
    let half = k.div_ceil(2);
    let e = half.trailing_zeros();
    let modulus = BigInt::from(big_pow(2, e + 1));
    let congruence_ok = z.mod_floor(&modulus) == BigInt::from(half).mod_floor(&modulus);
    Ok(ZValue { z, e, congruence_ok })
}

/// Odd `k`, odd `l`: `target = C(k+1, 2) (l^2 - 1)/(l^{k+1} - 1) B_{k-1}`.
///
/// `(l^2 - 1)/(l^{k+1} - 1) = 1/z` with `v2(z) = v2((k+1)/2)`, which cancels
/// the 2-part of `C(k+1, 2)` and leaves `v2(target) = v2(B_{k-1}) = -1`.
/// When `n = 4` and `4` does not divide `k - 1`, the hypothetical is a square
/// rather than a fourth power and the exponent is 2.
pub fn obstruction_case2(instance: ProblemInstance, n: u32) -> Result<ObstructionReport> {
    let k = instance.exponent();
    let ell = instance.multiplier();
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!("odd-exponent obstruction needs odd k >= 3, got {k}")));
    }
    if n < 2 {
        return Err(Error::domain(format!("n must be >= 2, got {n}")));
    }
    if ell.is_multiple_of(2) {
        return Err(Error::EvenMultiplierDelegated(ell));
    }
    let zv = z_value(k, ell)?;
    if !zv.congruence_ok {
        return Err(Error::invariant(format!("z congruence fails for {instance}")));
    }
    let ratio = ExactRational::new(
        instance.multiplier_pow_minus_one(2),
        instance.multiplier_pow_minus_one(k + 1),
    )?;
    let z_inv = ExactRational::new(1, zv.z.clone())?;
    if ratio != z_inv {
        return Err(Error::invariant(format!(
            "(l^2 - 1)/(l^(k+1) - 1) != 1/z for {instance}"
        )));
    }
    let target =
        ExactRational::from(binomial(k as u64 + 1, 2)) * ratio * bernoulli_number(k as usize - 1);
    let v2 = vp(&target, 2)?;
    let (exponent, detail) = if !(k - 1).is_multiple_of(n) && n == 4 {
        (2, ProofCase::Case2iiN4)
    } else {
        (n, ProofCase::Case2i)
    };
    let obstructed = v2 == -1;
    if obstructed {
        require_no_root(&target, exponent, instance)?;
    }
    Ok(ObstructionReport { target, v2, exponent, obstructed, detail })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Verdict {
    /// Finitely many solutions: the t-values avoid both exceptional shapes,
    /// or the matching obstruction rules the exceptional shape out.
    FiniteByBrindza,
    /// `k = 1` or `k = 3`, where infinite families exist.
    ExcludedK,
    /// Odd `k`, even `l`, on a path that needs the odd-`l` obstruction.
    DelegatedEvenL,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Witnesses {
    pub profile: MultiplicityProfile,
    pub t_values: TValues,
    pub pattern: PatternVerdict,
    /// Some root other than 0 has multiplicity not divisible by `n`.
    pub nonzero_root_not_divisible: bool,
    pub obstruction: Option<ObstructionReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassificationReport {
    pub instance: ProblemInstance,
    pub n: u32,
    pub verdict: Verdict,
    pub proof_case: ProofCase,
    pub witnesses: Witnesses,
}

/// The profile `classify` uses. For `k = 1` the parity rule on the zero
/// root does not apply, so the profile is read off the polynomial directly.
pub fn instance_profile(instance: ProblemInstance) -> Result<MultiplicityProfile> {
    if instance.exponent() < 2 {
        MultiplicityProfile::of_polynomial(build(instance).scaled())
    } else {
        multiplicity_profile(instance)
    }
}

pub fn classify(instance: ProblemInstance, n: u32) -> Result<ClassificationReport> {
    let profile = instance_profile(instance)?;
    classify_with_profile(instance, n, profile)
}

/// Classification against a given profile. Sweeps over many `n` reuse one
/// profile per instance; tests feed synthetic profiles to reach the
/// obstruction branches.
pub fn classify_with_profile(
    instance: ProblemInstance,
    n: u32,
    profile: MultiplicityProfile,
) -> Result<ClassificationReport> {
    if n < 2 {
        return Err(Error::domain(format!("n must be >= 2, got {n}")));
    }
    let k = instance.exponent();
    let odd_ell = instance.multiplier() % 2 == 1;
    let ts = t_values(&profile, n);
    let pattern = pattern_check(&ts);
    let case = proof_case(k, n);
    let nonzero_root_not_divisible =
        profile.nonzero_root_multiplicities().iter().any(|r| r % n != 0);

    let needs_case2 = matches!(case, ProofCase::Case2i | ProofCase::Case2iiN4);
    let (verdict, obstruction) = if k == 1 || k == 3 {
        (Verdict::ExcludedK, None)
    } else if !pattern.forbidden {
        let obstruction = match case {
            ProofCase::Case1ii => Some(obstruction_case1(instance, n)?),
            _ if needs_case2 && odd_ell => Some(obstruction_case2(instance, n)?),
            _ => None,
        };
        (Verdict::FiniteByBrindza, obstruction)
    } else if case == ProofCase::Case1ii {
        let report = obstruction_case1(instance, n)?;
        let verdict = if report.obstructed { Verdict::FiniteByBrindza } else { Verdict::Unresolved };
        (verdict, Some(report))
    } else if needs_case2 && !odd_ell {
        (Verdict::DelegatedEvenL, None)
    } else if needs_case2 {
        let report = obstruction_case2(instance, n)?;
        let verdict = if report.obstructed { Verdict::FiniteByBrindza } else { Verdict::Unresolved };
        (verdict, Some(report))
    } else {
        (Verdict::Unresolved, None)
    };

    Ok(ClassificationReport {
        instance,
        n,
        verdict,
        proof_case: case,
        witnesses: Witnesses {
            profile,
            t_values: ts,
            pattern,
            nonzero_root_not_divisible,
            obstruction,
        },
    })
}
