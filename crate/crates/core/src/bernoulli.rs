//! Bernoulli numbers, Bernoulli polynomials and the von Staudt–Clausen
//! denominator.
//!
//! Numbers come from the binomial recurrence
//! `sum_{j=0}^{m} C(m+1, j) B_j = 0` with `B_0 = 1`, which fixes
//! `B_1 = -1/2`. The denominator formula is kept as an independent check and
//! never used to construct values.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use spin::RwLock;

use crate::exactnum::{binomial, is_prime, ExactRational};
use crate::poly::RationalPolynomial;
use crate::{Error, Result};

/// Memo of `B_0..=B_max`, grown on demand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    pub const fn new() -> Self {
        Self { values: Vec::new() }
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Option<&ExactRational> {
        self.values.get(i)
    }

    /// Extends the table so that index `max_index` is present.
    pub fn extend_to(&mut self, max_index: usize) {
        while self.values.len() <= max_index {
            let m = self.values.len();
            let next = if m == 0 {
                ExactRational::one()
            } else {
                // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
                let mut acc = ExactRational::zero();
                for (j, b) in self.values.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    acc += &(ExactRational::from(binomial(m as u64 + 1, j as u64)) * b);
                }
                -(acc / ExactRational::from(m as i64 + 1))
            };
            self.values.push(next);
        }
    }

    /// Checks the structural facts every correct table satisfies: `B_0 = 1`,
    /// `B_1 = -1/2`, and `B_i = 0` for odd `i >= 3`. A table built with the
    /// `B_1 = +1/2` convention is rejected.
    pub fn validate(values: &[ExactRational]) -> Result<()> {
        if let Some(b0) = values.first() {
            if !b0.is_one() {
                return Err(Error::invariant(format!("B_0 = {b0}, expected 1/1")));
            }
        }
        if let Some(b1) = values.get(1) {
            let expected = ExactRational::new(-1, 2).expect("literal");
            if *b1 != expected {
                return Err(Error::invariant(format!("B_1 = {b1}, expected -1/2")));
            }
        }
        for (i, b) in values.iter().enumerate().skip(3).step_by(2) {
            if !b.is_zero() {
                return Err(Error::invariant(format!("B_{i} = {b}, expected 0")));
            }
        }
        Ok(())
    }
}

static TABLE: RwLock<BernoulliTable> = RwLock::new(BernoulliTable::new());

/// `B_i` under the `B_1 = -1/2` convention.
///
/// Backed by a process-wide memo: readers share the lock, and extension
/// takes the write lock so concurrent callers never see a partial table.
pub fn bernoulli_number(i: usize) -> ExactRational {
    if let Some(b) = TABLE.read().get(i) {
        return b.clone();
    }
    let mut table = TABLE.write();
    table.extend_to(i);
    table.values[i].clone()
}

/// Snapshot of `B_0..=B_max` from the shared memo.
pub fn bernoulli_numbers(max_index: usize) -> Vec<ExactRational> {
    bernoulli_number(max_index);
    TABLE.read().values[..=max_index].to_vec()
}

/// `B_q(x) = sum_{i=0}^{q} C(q, i) B_i x^{q-i}`; monic of degree `q`.
pub fn bernoulli_polynomial(q: usize) -> RationalPolynomial {
    let b = bernoulli_numbers(q);
    let mut coeffs = alloc::vec![ExactRational::zero(); q + 1];
    for (i, bi) in b.iter().enumerate() {
        coeffs[q - i] = ExactRational::from(binomial(q as u64, i as u64)) * bi;
    }
    RationalPolynomial::from_coefficients(coeffs)
}

/// Product of the primes `p` with `(p - 1) | k`, for even `k >= 2`.
///
/// By von Staudt–Clausen this is the denominator of `B_k`.
pub fn vsc_denominator(k: u64) -> Result<BigUint> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "denominator formula needs an even index >= 2, got {k}"
        )));
    }
    let prod = (1..=k)
        .filter(|d| k.is_multiple_of(*d) && is_prime(d + 1))
        .fold(BigUint::one(), |acc, d| acc * (d + 1));
    Ok(prod)
}

/// Self-test of `sum_{i=0}^{k-1} C(k, i) B_i = 0`.
pub fn check_binom_bernoulli_identity(k: usize) -> bool {
    let b = bernoulli_numbers(k.max(1));
    let sum = (0..k).fold(ExactRational::zero(), |acc, i| {
        acc + ExactRational::from(binomial(k as u64, i as u64)) * &b[i]
    });
    sum.is_zero()
}

/// True when the integer is divisible by no square of a prime.
pub fn is_squarefree(n: &BigInt) -> bool {
    let n = n.magnitude();
    let mut m = n.clone();
    let mut p = 2u64;
    while BigUint::from(p) * p <= m {
        if (&m % p) == BigUint::from(0u32) {
            m /= p;
            if (&m % p) == BigUint::from(0u32) {
                return false;
            }
        } else {
            p += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::vp;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), q(1, 1));
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(4), q(-1, 30));
        assert_eq!(bernoulli_number(10), q(5, 66));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
    }

    #[test]
    fn table_invariants_hold() {
        BernoulliTable::validate(&bernoulli_numbers(60)).unwrap();
    }

    #[test]
    fn plus_half_convention_rejected() {
        let mut values = bernoulli_numbers(6);
        values[1] = q(1, 2);
        assert!(BernoulliTable::validate(&values).is_err());
        let mut values = bernoulli_numbers(6);
        values[5] = q(1, 42);
        assert!(BernoulliTable::validate(&values).is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_polynomial(0), RationalPolynomial::one());
        assert_eq!(
            bernoulli_polynomial(2),
            RationalPolynomial::from_coefficients(alloc::vec![q(1, 6), q(-1, 1), q(1, 1)])
        );
        assert_eq!(
            bernoulli_polynomial(4),
            RationalPolynomial::from_coefficients(alloc::vec![
                q(-1, 30),
                q(0, 1),
                q(1, 1),
                q(-2, 1),
                q(1, 1)
            ])
        );
        for n in 0..=30 {
            let p = bernoulli_polynomial(n);
            assert_eq!(p.degree(), Some(n));
            assert!(p.is_monic());
            assert_eq!(p.eval(&ExactRational::zero()), bernoulli_number(n));
        }
    }

    #[test]
    fn denominators() {
        assert_eq!(vsc_denominator(2).unwrap(), BigUint::from(6u32));
        assert_eq!(vsc_denominator(10).unwrap(), BigUint::from(66u32));
        assert_eq!(vsc_denominator(12).unwrap(), BigUint::from(2730u32));
        assert!(vsc_denominator(0).is_err());
        assert!(vsc_denominator(7).is_err());
        for k in (2..=60).step_by(2) {
            let b = bernoulli_number(k);
            let den = vsc_denominator(k as u64).unwrap();
            assert_eq!(b.denom(), &BigInt::from(den), "B_{k}");
            assert!(is_squarefree(b.denom()));
            assert_eq!(vp(&b, 2).unwrap(), -1);
        }
    }

    #[test]
    fn binomial_identity() {
        for k in 2..=60 {
            assert!(check_binom_bernoulli_identity(k), "k = {k}");
        }
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(&BigInt::from(2730)));
        assert!(!is_squarefree(&BigInt::from(12)));
        assert!(is_squarefree(&BigInt::from(1)));
        assert!(!is_squarefree(&BigInt::from(49)));
    }

    #[test]
    fn memo_matches_fresh_table() {
        let mut fresh = BernoulliTable::new();
        fresh.extend_to(40);
        assert_eq!(fresh.values(), &bernoulli_numbers(40)[..]);
        // growing in steps gives the same prefix as growing at once
        let mut stepped = BernoulliTable::new();
        for i in (0..=40).step_by(7) {
            stepped.extend_to(i);
        }
        stepped.extend_to(40);
        assert_eq!(stepped, fresh);
    }
}
