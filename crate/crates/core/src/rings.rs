//! Exact coefficient scalars.
//!
//! [`Ring`] is the contract the dual-complex algebra needs from its
//! coefficients. Inverses are optional: integers only invert the units ±1,
//! while [`BigRational`] and [`QuadRat`] are fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, if one exists in this ring.
    fn checked_inv(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn checked_inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// An element `a + b·√2` of the real quadratic field ℚ(√2).
///
/// Both coefficients are reduced rationals, so `(a, b)` is unique per value
/// and the derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadRat {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadRat {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat { a, b }
    }

    pub fn from_ints(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadRat::new(rational(a), rational(b))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadRat::new(a, BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        QuadRat::from_ints(0, 1)
    }

    /// The silver ratio `1 + √2`.
    pub fn alpha() -> Self {
        QuadRat::from_ints(1, 1)
    }

    /// `1 - √2`, the conjugate root of `x² - 2x - 1`.
    pub fn beta() -> Self {
        QuadRat::from_ints(1, -1)
    }

    /// Field norm `a² - 2b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rational(2) * &self.b * &self.b
    }

    /// Galois conjugate `a - b·√2`.
    pub fn conj(&self) -> Self {
        QuadRat::new(self.a.clone(), -self.b.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a² - 2b² vanishes only at zero since √2 is irrational.
        let n = self.norm();
        Ok(QuadRat::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Exact `n`-th power; negative exponents go through [`QuadRat::inv`].
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = QuadRat::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq.clone();
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * sq;
            }
        }
        Ok(acc)
    }

    /// Returns the value as an integer if it has no √2 part and denominator 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }
}

impl From<BigInt> for QuadRat {
    fn from(v: BigInt) -> Self {
        QuadRat::from_rational(BigRational::from_integer(v))
    }
}

impl Add for QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: QuadRat) -> QuadRat {
        QuadRat::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: QuadRat) -> QuadRat {
        QuadRat::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: QuadRat) -> QuadRat {
        let a = &self.a * &rhs.a + rational(2) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadRat::new(a, b)
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        QuadRat::new(-self.a, -self.b)
    }
}

impl Zero for QuadRat {
    fn zero() -> Self {
        QuadRat::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadRat {
    fn one() -> Self {
        QuadRat::from_ints(1, 0)
    }
}

impl Ring for QuadRat {
    fn checked_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = rational_to_string(&self.a);
        if self.b.is_zero() {
            return f.write_str(&a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let b = rational_to_string(&self.b.abs());
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{b}√2")
        } else {
            write!(f, "{a} {sign} {b}√2")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{modified_pell, pell};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        let (a, b) = (QuadRat::alpha(), QuadRat::beta());
        assert_eq!(a.clone() * b.clone(), QuadRat::from_ints(-1, 0));
        assert_eq!(a.clone() * a.clone(), QuadRat::from_ints(3, 2));
        assert_eq!(a.clone() + b.clone(), QuadRat::from_ints(2, 0));
        assert_eq!(a.clone() - b, QuadRat::from_ints(0, 2));
    }

    #[test]
    fn inverses() {
        assert_eq!(QuadRat::alpha().inv().unwrap(), QuadRat::from_ints(-1, 1));
        assert_eq!(
            QuadRat::from_ints(2, 0).inv().unwrap(),
            QuadRat::from_rational(r(1, 2))
        );
        assert_eq!(
            QuadRat::sqrt2().inv().unwrap(),
            QuadRat::new(BigRational::zero(), r(1, 2))
        );
        assert_eq!(QuadRat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn powers() {
        let a = QuadRat::alpha();
        assert_eq!(a.pow(5).unwrap(), QuadRat::from_ints(41, 29));
        assert_eq!(a.pow(0).unwrap(), QuadRat::one());
        assert_eq!(a.pow(-1).unwrap(), QuadRat::from_ints(-1, 1));
        assert_eq!(QuadRat::zero().pow(-2), Err(Error::DivisionByZero));
        assert_eq!(QuadRat::zero().pow(0).unwrap(), QuadRat::one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(QuadRat::alpha().conj(), QuadRat::beta());
        assert_eq!(QuadRat::from_ints(3, 0).conj(), QuadRat::from_ints(3, 0));
        let x = QuadRat::from_ints(41, 29);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn alpha_powers_are_pell_pairs() {
        let a = QuadRat::alpha();
        let mut acc = QuadRat::one();
        for n in 0..=100 {
            assert_eq!(
                acc,
                QuadRat::from_ints(modified_pell(n), pell(n)),
                "n = {n}"
            );
            assert_eq!(a.pow(n).unwrap(), acc);
            acc = acc * a.clone();
        }
    }

    #[test]
    fn display() {
        assert_eq!(QuadRat::from_ints(41, 29).to_string(), "41 + 29√2");
        assert_eq!(QuadRat::beta().to_string(), "1 - 1√2");
        assert_eq!(
            QuadRat::new(BigRational::zero(), r(1, 2)).to_string(),
            "1/2√2"
        );
        assert_eq!(QuadRat::from_ints(-3, 0).to_string(), "-3");
    }

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).checked_inv(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).checked_inv(), None);
    }
}
