//! Scalar kernels: the integer-scalar trait and Gaussian integers over it.
//!
//! Everything spectral in this crate that has to be exact runs over a scalar
//! type `T` implementing [`ExactScalar`]: `i64` for the small-order hot paths
//! (census, switching trials) and [`num_bigint::BigInt`] for the public API,
//! where coefficient growth must never overflow. Concrete aliases live at the
//! crate root ([`crate::GaussianInt`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact signed scalar: `i64`/`i128`/`BigInt`, plus `BigRational` where
/// averages enter (quotient matrices).
pub trait ExactScalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i8(v: i8) -> Self;

    /// Exact division by a small positive integer. Panics if the division
    /// leaves a remainder; callers rely on this as an internal-error check.
    fn exact_div_small(&self, k: usize) -> Self;
}

impl ExactScalar for i64 {
    fn from_i8(v: i8) -> Self {
        v as i64
    }

    fn exact_div_small(&self, k: usize) -> Self {
        let k = k as i64;
        assert_eq!(self % k, 0, "inexact division: {self} / {k}");
        self / k
    }
}

impl ExactScalar for i128 {
    fn from_i8(v: i8) -> Self {
        v as i128
    }

    fn exact_div_small(&self, k: usize) -> Self {
        let k = k as i128;
        assert_eq!(self % k, 0, "inexact division: {self} / {k}");
        self / k
    }
}

impl ExactScalar for BigInt {
    fn from_i8(v: i8) -> Self {
        BigInt::from(v)
    }

    fn exact_div_small(&self, k: usize) -> Self {
        let k = BigInt::from(k);
        let (q, r) = num_integer::Integer::div_rem(self, &k);
        assert!(r.is_zero(), "inexact division: {self} / {k}");
        q
    }
}

impl ExactScalar for num_rational::BigRational {
    fn from_i8(v: i8) -> Self {
        num_rational::BigRational::from_integer(BigInt::from(v))
    }

    fn exact_div_small(&self, k: usize) -> Self {
        self / num_rational::BigRational::from_integer(BigInt::from(k))
    }
}

/// Gaussian integer `re + im·i` over an exact integer scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T: ExactScalar> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn from_parts_i8(re: i8, im: i8) -> Self {
        Gaussian::new(T::from_i8(re), T::from_i8(im))
    }

    pub fn zero() -> Self {
        Gaussian::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(T::one(), T::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn exact_div_small(&self, k: usize) -> Self {
        Gaussian::new(self.re.exact_div_small(k), self.im.exact_div_small(k))
    }
}

impl<T: ExactScalar> Add for Gaussian<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: ExactScalar> Sub for Gaussian<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: ExactScalar> Mul for Gaussian<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Gaussian::new(re, im)
    }
}

impl<'a, T: ExactScalar> Mul for &'a Gaussian<T> {
    type Output = Gaussian<T>;
    fn mul(self, rhs: Self) -> Gaussian<T> {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re.clone() * rhs.im.clone() + self.im.clone() * rhs.re.clone();
        Gaussian::new(re, im)
    }
}

impl<T: ExactScalar> Neg for Gaussian<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian::new(-self.re, -self.im)
    }
}

impl<T: ExactScalar> fmt::Debug for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<T: ExactScalar> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
