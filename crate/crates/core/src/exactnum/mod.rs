//! Exact scalars: arbitrary-precision rationals and real quadratic fields.
//!
//! Both scalar types implement [`Scalar`], which is the bound the geometry,
//! construction and verification layers are written against. A `Rational`
//! carries field radicand 1 and promotes into any `ℚ(√m)` on demand.

mod quad;
mod rational;

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

pub use quad::{quad_arith, quad_compare, quad_make, quad_sign, quad_to_decimal, QuadValue};
pub use rational::{rat_arith, rat_make, Rational};

pub(crate) use quad::join_radicands;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivideByZero,
    #[error("negative radicand {0}")]
    NegativeRadicand(i64),
    #[error("field mismatch: Q(sqrt {left}) vs Q(sqrt {right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl From<Sign> for Ordering {
    fn from(s: Sign) -> Ordering {
        match s {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// Exact ordered ring operations, all that orientation predicates need.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    fn sign(&self) -> Sign;
    fn from_integer(n: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn exact_cmp(&self, other: &Self) -> Ordering {
        self.sub_ref(other).sign().into()
    }
}

impl Ring for i128 {
    fn sign(&self) -> Sign {
        match self.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }

    fn from_integer(n: i64) -> Self {
        n as i128
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn exact_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

/// An exact ordered field element usable as a coordinate.
///
/// Arithmetic panics on a field mismatch; callers that accept untrusted
/// values check [`Scalar::radicand`] compatibility first.
pub trait Scalar:
    Ring
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Squarefree radicand of the field the value lives in; 1 when rational.
    fn radicand(&self) -> u64;

    fn from_rational(r: Rational) -> Self;

    fn to_rational(&self) -> Option<Rational>;

    fn to_quad(&self) -> QuadValue;

    fn div_ref(&self, rhs: &Self) -> Self;

    fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn to_decimal(&self, digits: usize) -> String {
        self.to_quad().to_decimal(digits)
    }
}

impl Ring for Rational {
    fn sign(&self) -> Sign {
        Sign::of_rational(self)
    }

    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn exact_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

impl Scalar for Rational {
    fn radicand(&self) -> u64 {
        1
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_quad(&self) -> QuadValue {
        QuadValue::from(self.clone())
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Ring for QuadValue {
    fn sign(&self) -> Sign {
        QuadValue::sign(self)
    }

    fn from_integer(n: i64) -> Self {
        QuadValue::from_integer(n)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for QuadValue {
    fn radicand(&self) -> u64 {
        QuadValue::radicand(self)
    }

    fn from_rational(r: Rational) -> Self {
        QuadValue::from(r)
    }

    fn to_rational(&self) -> Option<Rational> {
        QuadValue::to_rational(self)
    }

    fn to_quad(&self) -> QuadValue {
        self.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// The single field shared by `values`, or the first mismatching pair.
pub fn common_radicand<'a, T: Scalar>(
    values: impl IntoIterator<Item = &'a T>,
) -> Result<u64, NumError> {
    values
        .into_iter()
        .try_fold(1, |acc, v| join_radicands(acc, v.radicand()))
}
