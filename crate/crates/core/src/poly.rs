//! Dense univariate polynomials over the rationals, plus the integer
//! polynomial arithmetic used for gcd chains.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::ExactRational;

/// Coefficients in ascending degree order. The last stored coefficient is
/// nonzero; the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coefficients(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coefficients(vec![ExactRational::zero(), ExactRational::one()])
    }

    /// `c * x^degree`.
    pub fn monomial(c: ExactRational, degree: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coefficients(coeffs)
    }

    /// Builds from ascending coefficients, trimming high-order zeros.
    pub fn from_coefficients(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(ExactRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coefficients(coeffs.into_iter().map(ExactRational::from).collect())
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coefficient(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(ExactRational::is_one)
    }

    /// Number of consecutive zero coefficients from degree 0, i.e. the
    /// multiplicity of 0 as a root. `None` for the zero polynomial.
    pub fn zero_root_multiplicity(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        Some(self.coeffs.iter().take_while(|c| c.is_zero()).count())
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient().and_then(ExactRational::recip) {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coefficients(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * ExactRational::from(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `p(a*x + b)` by Horner's scheme on the affine argument.
    pub fn compose_affine(&self, a: &ExactRational, b: &ExactRational) -> Self {
        let arg = Self::from_coefficients(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Self::constant(c.clone());
        }
        acc
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Clears denominators and removes the content, giving a primitive
    /// integer polynomial with positive leading coefficient and the same roots.
    pub(crate) fn to_primitive_integer(&self) -> IntPolynomial {
        let lcm = self.denominator_lcm();
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPolynomial::new(ints).primitive_part()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coefficients(
            (0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect(),
        )
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coefficients(
            (0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect(),
        )
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        RationalPolynomial::from_coefficients(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub(crate) fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub(crate) fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = self.content();
        if self.lc().is_negative() {
            content = -content;
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    pub(crate) fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub(crate) fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        Self::new((0..n).map(|i| get(self, i) - get(rhs, i)).collect())
    }

    /// `lc(d)^e * self mod d`, with the leading term killed one degree at a
    /// time. Only used up to a constant factor.
    fn pseudo_remainder(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("nonzero divisor");
        let dlc = divisor.lc().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let rlc = r.lc().clone();
            let shift = dr - dd;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &dlc).collect();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                next[i + shift] -= &rlc * c;
            }
            r = Self::new(next);
        }
        r
    }

    /// Primitive gcd with positive leading coefficient, via the primitive
    /// polynomial remainder sequence. `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient in Z[x], or `None` if `divisor` does not divide `self`
    /// with integer cofactor.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::new(Vec::new()));
        }
        let ds = self.degree()?;
        if ds < dd {
            return None;
        }
        let dlc = divisor.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for shift in (0..=ds - dd).rev() {
            let top = &rem[shift + dd];
            let (q, r) = top.div_rem(dlc);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[i + shift] -= &q * c;
                }
            }
            quot[shift] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    pub(crate) fn to_rational(&self) -> RationalPolynomial {
        RationalPolynomial::from_coefficients(
            self.coeffs.iter().cloned().map(ExactRational::from).collect(),
        )
    }
}
