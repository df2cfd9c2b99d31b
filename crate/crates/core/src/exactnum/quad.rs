use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use super::{ArithOp, NumError, Rational, Sign};

/// An element `rat + coef·√radicand` of a real quadratic field.
///
/// The radicand is always squarefree. Values with a zero coefficient are
/// folded to radicand 1, so two values are equal iff their components are.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadValue {
    rat: Rational,
    coef: Rational,
    radicand: u64,
}

/// Splits `n` into `(core, f)` with `n = f²·core` and `core` squarefree.
fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut core = 1u64;
    let mut factor = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        factor *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (core * n, factor)
}

/// Builds `rat + coef·√radicand`, extracting square factors from the radicand.
pub fn quad_make(rat: Rational, coef: Rational, radicand: i64) -> Result<QuadValue, NumError> {
    if radicand < 0 {
        return Err(NumError::NegativeRadicand(radicand));
    }
    if radicand == 0 {
        return Ok(QuadValue::from(rat));
    }
    let (core, factor) = squarefree_split(radicand as u64);
    let coef = coef * Rational::from_integer(factor);
    if core == 1 {
        return Ok(QuadValue::from(rat + coef));
    }
    Ok(QuadValue::raw(rat, coef, core))
}

pub fn quad_arith(op: ArithOp, a: &QuadValue, b: &QuadValue) -> Result<QuadValue, NumError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

pub fn quad_sign(a: &QuadValue) -> Sign {
    a.sign()
}

pub fn quad_compare(a: &QuadValue, b: &QuadValue) -> Result<Ordering, NumError> {
    Ok(a.checked_sub(b)?.sign().into())
}

pub fn quad_to_decimal(a: &QuadValue, digits: usize) -> String {
    a.to_decimal(digits)
}

impl QuadValue {
    fn raw(rat: Rational, coef: Rational, radicand: u64) -> Self {
        if coef.is_zero() {
            QuadValue { rat, coef, radicand: 1 }
        } else {
            QuadValue { rat, coef, radicand }
        }
    }

    /// `√m`, normalized.
    pub fn sqrt(m: u64) -> Self {
        quad_make(Rational::zero(), Rational::one(), m as i64).expect("nonnegative radicand")
    }

    pub fn from_integer(n: i64) -> Self {
        QuadValue::from(Rational::from_integer(n))
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn coef(&self) -> &Rational {
        &self.coef
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rat.clone())
    }

    /// The radicand shared by `self` and `other`, promoting rationals.
    pub fn join_field(&self, other: &Self) -> Result<u64, NumError> {
        join_radicands(self.radicand, other.radicand)
    }

    pub fn conjugate(&self) -> Self {
        QuadValue::raw(self.rat.clone(), -&self.coef, self.radicand)
    }

    /// `rat² − coef²·radicand`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &self.coef * &self.coef * Rational::from_integer(self.radicand)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, NumError> {
        let m = self.join_field(rhs)?;
        Ok(QuadValue::raw(&self.rat + &rhs.rat, &self.coef + &rhs.coef, m))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, NumError> {
        let m = self.join_field(rhs)?;
        Ok(QuadValue::raw(&self.rat - &rhs.rat, &self.coef - &rhs.coef, m))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, NumError> {
        let m = self.join_field(rhs)?;
        if self.is_rational() {
            return Ok(QuadValue::raw(&self.rat * &rhs.rat, &self.rat * &rhs.coef, m));
        }
        if rhs.is_rational() {
            return Ok(QuadValue::raw(&self.rat * &rhs.rat, &self.coef * &rhs.rat, m));
        }
        let rat = &self.rat * &rhs.rat + &self.coef * &rhs.coef * Rational::from_integer(m);
        let coef = &self.rat * &rhs.coef + &self.coef * &rhs.rat;
        Ok(QuadValue::raw(rat, coef, m))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        self.join_field(rhs)?;
        if rhs.is_zero() {
            return Err(NumError::DivideByZero);
        }
        if rhs.is_rational() {
            return Ok(QuadValue::raw(
                &self.rat / &rhs.rat,
                &self.coef / &rhs.rat,
                self.radicand,
            ));
        }
        // Nonzero with squarefree radicand ≥ 2, so the norm is nonzero.
        let norm = rhs.norm();
        let num = self.checked_mul(&rhs.conjugate())?;
        Ok(QuadValue::raw(&num.rat / &norm, &num.coef / &norm, num.radicand))
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact sign of the real number `rat + coef·√radicand`.
    pub fn sign(&self) -> Sign {
        let sx = Sign::of_rational(&self.rat);
        let sy = Sign::of_rational(&self.coef);
        match (sx, sy) {
            (_, Sign::Zero) => sx,
            (Sign::Zero, _) => sy,
            _ if sx == sy => sx,
            _ => {
                let x2 = &self.rat * &self.rat;
                let y2m = &self.coef * &self.coef * Rational::from_integer(self.radicand);
                if x2 > y2m {
                    sx
                } else {
                    sy
                }
            }
        }
    }

    /// Largest integer not greater than the value.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.rat.floor();
        }
        let y2m = &self.coef * &self.coef * Rational::from_integer(self.radicand);
        // ⌊√x⌋ = ⌊√⌊x⌋⌋ for x ≥ 0
        let root = y2m.floor().sqrt();
        let mut n = if self.coef.is_positive() {
            (&self.rat + &Rational::from_integer(root)).floor()
        } else {
            (&self.rat - &Rational::from_integer(root + 1)).floor()
        };
        let below = |n: &BigInt| {
            let step = QuadValue::from(Rational::from_integer(n.clone()));
            (self - &step).sign()
        };
        while below(&(&n + 1)) != Sign::Negative {
            n += 1;
        }
        while below(&n) == Sign::Negative {
            n -= 1;
        }
        n
    }

    /// Decimal string rounded half-up to `digits` fractional digits.
    ///
    /// Display only; nothing exact depends on it.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let half = Rational::new(1, 2).expect("nonzero");
        let scaled = self * &QuadValue::from(Rational::from_integer(scale.clone()))
            + QuadValue::from(half);
        let n = scaled.floor();
        let negative = n.is_negative();
        let n = n.abs();
        let int = &n / &scale;
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&int.to_string());
        if digits > 0 {
            let frac = (&n % &scale).to_string();
            out.push('.');
            out.push_str(&"0".repeat(digits - frac.len()));
            out.push_str(&frac);
        }
        out
    }

    /// Approximation for display and test oracles.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17).parse().unwrap_or(f64::NAN)
    }
}

pub(crate) fn join_radicands(a: u64, b: u64) -> Result<u64, NumError> {
    match (a, b) {
        (1, m) | (m, 1) => Ok(m),
        (a, b) if a == b => Ok(a),
        (left, right) => Err(NumError::FieldMismatch { left, right }),
    }
}

impl From<Rational> for QuadValue {
    fn from(rat: Rational) -> Self {
        QuadValue { rat, coef: Rational::zero(), radicand: 1 }
    }
}

impl PartialOrd for QuadValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|d| d.sign().into())
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.rat)
        } else {
            write!(f, "{} + {}·√{}", self.rat, self.coef, self.radicand)
        }
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum QuadRepr {
    Rational(Rational),
    Full { rat: Rational, coef: Rational, radicand: i64 },
}

impl<'de> Deserialize<'de> for QuadValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match QuadRepr::deserialize(deserializer)? {
            QuadRepr::Rational(r) => Ok(QuadValue::from(r)),
            QuadRepr::Full { rat, coef, radicand } => {
                quad_make(rat, coef, radicand).map_err(serde::de::Error::custom)
            }
        }
    }
}

impl Zero for QuadValue {
    fn zero() -> Self {
        QuadValue::from(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef.is_zero()
    }
}

impl One for QuadValue {
    fn one() -> Self {
        QuadValue::from(Rational::one())
    }
}

impl Neg for QuadValue {
    type Output = QuadValue;

    fn neg(self) -> QuadValue {
        QuadValue::raw(-self.rat, -self.coef, self.radicand)
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;

    fn neg(self) -> QuadValue {
        QuadValue::raw(-&self.rat, -&self.coef, self.radicand)
    }
}

// Operator forms panic on a field mismatch; the `checked_*` methods report it.
macro_rules! forward_binop {
    ($imp:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b> $imp<&'b QuadValue> for &'a QuadValue {
            type Output = QuadValue;
            fn $method(self, rhs: &'b QuadValue) -> QuadValue {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $imp<QuadValue> for QuadValue {
            type Output = QuadValue;
            fn $method(self, rhs: QuadValue) -> QuadValue {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a QuadValue> for QuadValue {
            type Output = QuadValue;
            fn $method(self, rhs: &'a QuadValue) -> QuadValue {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<QuadValue> for &'a QuadValue {
            type Output = QuadValue;
            fn $method(self, rhs: QuadValue) -> QuadValue {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);
