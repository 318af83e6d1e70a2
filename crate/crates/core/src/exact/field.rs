use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Gaussian, Scalar};

/// Exact field used by the generic linear algebra.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_scalar(s: Scalar) -> Self;
    /// Complex conjugate; identity on real fields.
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// The value as a rational, if it is real.
    fn as_scalar(&self) -> Option<Scalar>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(v: i64) -> Self {
        Self::from_scalar(Scalar::int(v))
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn one() -> Self {
        Scalar::ONE
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn as_scalar(&self) -> Option<Scalar> {
        Some(self.clone())
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
}

impl Field for Gaussian {
    fn zero() -> Self {
        Gaussian::ZERO
    }
    fn one() -> Self {
        Gaussian::ONE
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_scalar(s: Scalar) -> Self {
        Gaussian::real(s)
    }
    fn conj(&self) -> Self {
        Gaussian::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn as_scalar(&self) -> Option<Scalar> {
        self.im.is_zero().then(|| self.re.clone())
    }
}
