//! The shifted power sum `(x+1)^k + ... + (lx)^k` as a polynomial in `x`.
//!
//! Two normalizations are kept side by side:
//!
//! * `sum`: the polynomial whose value at every integer `x >= 1` is the
//!   actual sum. Used for solution search.
//! * `scaled`: `(k+1) * sum = B_{k+1}(lx+1) - B_{k+1}(x+1)`. Its coefficients
//!   are the ones the closed forms below describe, and root analysis runs on
//!   it. The two differ by a nonzero constant so they share roots and
//!   multiplicities.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::exactnum::{big_pow, binomial, ExactRational};
use crate::poly::RationalPolynomial;
use crate::{Error, Result};

/// The fixed parameters of one equation: the exponent `k >= 1` and the
/// multiplier `l >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ProblemInstance {
    #[cfg_attr(feature = "serde", serde(rename = "k"))]
    exponent: u32,
    #[cfg_attr(feature = "serde", serde(rename = "l"))]
    multiplier: u32,
}

impl ProblemInstance {
    pub fn new(exponent: u32, multiplier: u32) -> Result<Self> {
        if exponent < 1 {
            return Err(Error::domain(format!("exponent k must be >= 1, got {exponent}")));
        }
        if multiplier < 2 {
            return Err(Error::domain(format!("multiplier l must be >= 2, got {multiplier}")));
        }
        Ok(Self { exponent, multiplier })
    }

    /// `k`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `l`.
    pub fn multiplier(&self) -> u32 {
        self.multiplier
    }

    /// `l^e - 1` as an exact integer.
    pub(crate) fn multiplier_pow_minus_one(&self, e: u32) -> BigInt {
        BigInt::from(big_pow(self.multiplier as u64, e)) - 1
    }
}

impl core::fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "k={} l={}", self.exponent, self.multiplier)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumPolynomial {
    instance: ProblemInstance,
    sum: RationalPolynomial,
    scaled: RationalPolynomial,
}

impl PowerSumPolynomial {
    pub fn instance(&self) -> ProblemInstance {
        self.instance
    }

    /// The true sum polynomial `S`.
    pub fn sum(&self) -> &RationalPolynomial {
        &self.sum
    }

    /// `H = (k+1) * S`.
    pub fn scaled(&self) -> &RationalPolynomial {
        &self.scaled
    }

    /// Exact value of the sum at `x`, read off `S`.
    pub fn sum_at(&self, x: u64) -> ExactRational {
        self.sum.eval(&ExactRational::from(BigInt::from(x)))
    }
}

/// Builds `H = B_{k+1}(lx+1) - B_{k+1}(x+1)` by affine substitution and
/// `S = H / (k+1)`.
pub fn build(instance: ProblemInstance) -> PowerSumPolynomial {
    let k = instance.exponent as usize;
    let b = bernoulli_polynomial(k + 1);
    let one = ExactRational::one();
    let ell = ExactRational::from(instance.multiplier as i64);
    let scaled = &b.compose_affine(&ell, &one) - &b.compose_affine(&one, &one);
    let inv = ExactRational::new(1, k as i64 + 1).expect("k + 1 > 0");
    let sum = scaled.scale(&inv);
    PowerSumPolynomial { instance, sum, scaled }
}

fn require_match(what: &str, instance: ProblemInstance, formula: &ExactRational, actual: &ExactRational) -> Result<()> {
    if formula != actual {
        return Err(Error::invariant(format!(
            "{what} for {instance}: closed form {formula}, polynomial has {actual}"
        )));
    }
    Ok(())
}

/// The three leading coefficients of `H`:
/// `l^{k+1} - 1`, `(k+1)(l^k - 1)/2`, `(k+1)k(l^{k-1} - 1)/12`.
///
/// Each is checked against the built polynomial.
pub fn top_coefficients(
    instance: ProblemInstance,
) -> Result<(ExactRational, ExactRational, ExactRational)> {
    let k = instance.exponent;
    if k < 2 {
        return Err(Error::domain(format!("top coefficients need k >= 2, got {k}")));
    }
    let kk = k as i64;
    let lead = ExactRational::from(instance.multiplier_pow_minus_one(k + 1));
    let second = ExactRational::from(instance.multiplier_pow_minus_one(k))
        * ExactRational::new(kk + 1, 2).expect("nonzero");
    let third = ExactRational::from(instance.multiplier_pow_minus_one(k - 1))
        * ExactRational::new((kk + 1) * kk, 12).expect("nonzero");

    let h = build(instance);
    let h = h.scaled();
    let top = k as usize + 1;
    if h.degree() != Some(top) {
        return Err(Error::invariant(format!("degree of H for {instance} is not {top}")));
    }
    require_match("leading coefficient", instance, &lead, &h.coefficient(top))?;
    require_match("x^k coefficient", instance, &second, &h.coefficient(top - 1))?;
    require_match("x^(k-1) coefficient", instance, &third, &h.coefficient(top - 2))?;
    Ok((lead, second, third))
}

/// For even `k`: the coefficient of `x` in `H`, `(k+1)(l-1)B_k`, which is
/// nonzero.
pub fn degree1_coefficient(instance: ProblemInstance) -> Result<ExactRational> {
    let k = instance.exponent;
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::domain(format!("degree-1 coefficient formula needs even k >= 2, got {k}")));
    }
    let value = ExactRational::from((k as i64 + 1) * (instance.multiplier as i64 - 1))
        * bernoulli_number(k as usize);
    require_match("x coefficient", instance, &value, &build(instance).scaled().coefficient(1))?;
    if value.is_zero() {
        return Err(Error::invariant(format!("x coefficient vanishes for {instance}")));
    }
    Ok(value)
}

/// For odd `k >= 3`: the coefficient of `x^2` in `H`,
/// `C(k+1, 2)(l^2 - 1)B_{k-1}`, which is nonzero.
pub fn degree2_coefficient(instance: ProblemInstance) -> Result<ExactRational> {
    let k = instance.exponent;
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!("degree-2 coefficient formula needs odd k >= 3, got {k}")));
    }
    let value = ExactRational::from(binomial(k as u64 + 1, 2))
        * ExactRational::from(instance.multiplier_pow_minus_one(2))
        * bernoulli_number(k as usize - 1);
    require_match("x^2 coefficient", instance, &value, &build(instance).scaled().coefficient(2))?;
    if value.is_zero() {
        return Err(Error::invariant(format!("x^2 coefficient vanishes for {instance}")));
    }
    Ok(value)
}

/// `sum_{j=x+1}^{lx} j^k` by literal summation. Independent of the
/// polynomial route.
pub fn direct_sum(instance: ProblemInstance, x: u64) -> BigUint {
    let hi = x * instance.multiplier as u64;
    let mut acc = BigUint::zero();
    for j in x + 1..=hi {
        acc += Pow::pow(BigUint::from(j), instance.exponent);
    }
    acc
}
