//! Arbitrary-precision rationals, p-adic valuations and perfect-power tests.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::{Error, Result};

/// A rational number in lowest terms with a strictly positive denominator.
///
/// Zero is `0/1`. Every arithmetic operation re-normalizes, so structural
/// equality is numeric equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numerator/denominator` reduced to lowest terms.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::domain("denominator must be nonzero"));
        }
        Ok(ExactRational(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(ExactRational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        ExactRational(Pow::pow(&self.0, exp))
    }

    /// Returns the integer value if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigUint> for ExactRational {
    fn from(n: BigUint) -> Self {
        Self::from_integer(BigInt::from(n))
    }
}

impl fmt::Display for ExactRational {
    /// Always `num/den`, including integers (`5/1`) and zero (`0/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `a/b` or a bare integer `a`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::domain(alloc::format!("not an integer: {t:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'b ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as it does for the underlying ratio type.
forward_binop!(Div, div);

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for ExactRational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

/// The exponent of a prime in a nonzero rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Valuation {
    pub prime: u64,
    pub value: i64,
}

/// Deterministic trial division; primes passed here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= p / d {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of `p` in a nonzero integer magnitude, with `p` already known prime.
fn vp_uint(n: &BigUint, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    if p == 2 {
        return n.trailing_zeros().unwrap_or(0);
    }
    let p = BigUint::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// v_p of a nonzero integer.
pub fn vp_int(n: &BigInt, p: u64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    Ok(vp_uint(n.magnitude(), p) as i64)
}

/// v_p(q) = v_p(numerator) - v_p(denominator). At most one of the two terms
/// is nonzero since the fraction is reduced.
pub fn vp(q: &ExactRational, p: u64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let up = vp_uint(q.numer().magnitude(), p) as i64;
    let down = vp_uint(q.denom().magnitude(), p) as i64;
    Ok(up - down)
}

pub fn valuation(q: &ExactRational, p: u64) -> Result<Valuation> {
    vp(q, p).map(|value| Valuation { prime: p, value })
}

/// `(floor(N^(1/n)), root^n == N)`.
pub fn integer_nth_root(value: &BigUint, n: u32) -> Result<(BigUint, bool)> {
    if n < 2 {
        return Err(Error::domain(alloc::format!("root index must be at least 2, got {n}")));
    }
    let root = value.nth_root(n);
    let exact = Pow::pow(&root, n) == *value;
    Ok((root, exact))
}

/// The rational `r` with `r^n = q`, if one exists.
///
/// For `q` in lowest terms this exists iff both `|numerator|` and the
/// denominator are perfect n-th powers and `q` is nonnegative or `n` is odd.
/// `n = 1` returns `q` itself and `n = 0` returns `None`.
pub fn rational_nth_power_root(q: &ExactRational, n: u32) -> Option<ExactRational> {
    match n {
        0 => return None,
        1 => return Some(q.clone()),
        _ => {}
    }
    if q.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let (num_root, num_exact) = integer_nth_root(q.numer().magnitude(), n).ok()?;
    if !num_exact {
        return None;
    }
    let (den_root, den_exact) = integer_nth_root(q.denom().magnitude(), n).ok()?;
    if !den_exact {
        return None;
    }
    let sign = if q.is_negative() { Sign::Minus } else { Sign::Plus };
    let num = BigInt::from_biguint(sign, num_root);
    ExactRational::new(num, BigInt::from(den_root)).ok()
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` as a big integer.
pub fn big_pow(base: u64, exp: u32) -> BigUint {
    Pow::pow(BigUint::from(base), exp)
}
