//! Exact scalar arithmetic and the ring abstraction every series type is
//! generic over.

mod gaussian;
mod numbers;
mod rational;

pub use gaussian::GaussianRational;
pub use numbers::{bernoulli, binomial, factorial, secant_number};
pub use rational::Rational;

use num_bigint::BigInt;
use std::fmt;

/// A commutative ring with exact arithmetic.
///
/// Method names deliberately shadow `std::ops`; generic code only ever sees
/// this trait, so there is no ambiguity in practice.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn from_int(n: &BigInt) -> Self;

    /// Multiplicative inverse when `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = Ring::sub(self, rhs);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        self.add_assign(&a.mul(b));
    }

    fn scale_int(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(n))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Rings containing the rationals; needed for formal log/exp and fitting.
pub trait QAlgebra: Ring {
    fn from_rational(q: &Rational) -> Self;

    fn div_int(&self, n: i64) -> Self {
        self.mul(&Self::from_rational(&Rational::new(1, n)))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        <BigInt as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigInt as num_traits::Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
    fn try_inverse(&self) -> Option<Self> {
        let one = <BigInt as Ring>::one();
        if *self == one || *self == -&one {
            Some(self.clone())
        } else {
            None
        }
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}
