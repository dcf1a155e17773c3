//! Scalar fields: exact rationals and tolerance-compared doubles.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};

/// Default relative tolerance for float equality.
pub const REL_TOL: f64 = 1e-9;
/// Default absolute tolerance for float equality.
pub const ABS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Rational,
    Float,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Rational => "rational",
            Mode::Float => "float",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(Mode::Rational),
            "float" => Ok(Mode::Float),
            other => Err(Error::Malformed(format!("unknown scalar mode {other:?}"))),
        }
    }
}

/// A scalar field usable as coordinates of every algebra in the crate.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// `num / den`; panics on a zero denominator.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
    /// Draw a value from the sampling distribution used by the property suites.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc * self.clone())
    }

    fn half(&self) -> Self {
        self.clone() * Self::from_ratio(1, 2)
    }
}

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_big(value: BigRational) -> Self {
        Rational(value)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("not a rational: {s:?}"));
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty($tr::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Field for Rational {
    const MODE: Mode = Mode::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(v: i64) -> Self {
        v.into()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(num, den).expect("nonzero denominator")
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) => n
                .as_i64()
                .map(Rational::from)
                .ok_or_else(|| Error::Malformed(format!("rational mode needs \"p/q\" strings, got {n}"))),
            other => Err(Error::Malformed(format!("expected a rational, got {other}"))),
        }
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Rational::from_ratio(rng.gen_range(-20..=20), rng.gen_range(1..=6))
    }
}

/// Double with tolerance-based equality:
/// `|x - y| <= ABS_TOL + REL_TOL * max(|x|, |y|)`.
#[derive(Clone, Copy, Default)]
pub struct Float64(pub f64);

impl Float64 {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn sqrt(self) -> Float64 {
        Float64(self.0.sqrt())
    }

    pub fn abs(self) -> Float64 {
        Float64(self.0.abs())
    }
}

/// The tolerance comparison behind `Float64`'s equality.
pub fn approx_eq(x: f64, y: f64, rel_tol: f64, abs_tol: f64) -> bool {
    if x == y {
        return true;
    }
    (x - y).abs() <= abs_tol + rel_tol * x.abs().max(y.abs())
}

impl PartialEq for Float64 {
    fn eq(&self, other: &Self) -> bool {
        approx_eq(self.0, other.0, REL_TOL, ABS_TOL)
    }
}

impl fmt::Debug for Float64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Float64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<f64> for Float64 {
    fn from(v: f64) -> Self {
        Float64(v)
    }
}

forward_binop!(Float64, Add, add);
forward_binop!(Float64, Sub, sub);
forward_binop!(Float64, Mul, mul);

impl Neg for Float64 {
    type Output = Float64;
    fn neg(self) -> Float64 {
        Float64(-self.0)
    }
}

impl Field for Float64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Float64(0.0)
    }

    fn one() -> Self {
        Float64(1.0)
    }

    fn from_i64(v: i64) -> Self {
        Float64(v as f64)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Float64(num as f64 / den as f64)
    }

    fn is_zero(&self) -> bool {
        self.0.abs() <= ABS_TOL
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Float64(1.0 / self.0))
        }
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(self.0).map(Value::Number).unwrap_or(Value::Null)
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n.as_f64().map(Float64).ok_or_else(|| Error::Malformed(format!("not a float: {n}"))),
            Value::String(s) => match s.parse::<f64>() {
                Ok(x) => Ok(Float64(x)),
                Err(_) => s.parse::<Rational>().map(|r| Float64(r.to_f64())),
            },
            other => Err(Error::Malformed(format!("expected a number, got {other}"))),
        }
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Float64(rng.gen_range(-10.0..=10.0))
    }
}

/// A scalar whose mode is only known at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Float(Float64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rational(_) => Mode::Rational,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn from_json(v: &Value, mode: Mode) -> Result<Self> {
        match mode {
            Mode::Rational => Rational::from_json(v).map(Scalar::Rational),
            Mode::Float => Float64::from_json(v).map(Scalar::Float),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rational(r) => r.to_json(),
            Scalar::Float(x) => x.to_json(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

pub fn scalar_add(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x.clone() + y.clone())),
        (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(*x + *y)),
        _ => Err(Error::ModeMismatch),
    }
}

pub fn scalar_mul(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x.clone() * y.clone())),
        (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(*x * *y)),
        _ => Err(Error::ModeMismatch),
    }
}

pub fn scalar_inv(a: &Scalar) -> Result<Scalar> {
    match a {
        Scalar::Rational(x) => x.inv().map(Scalar::Rational),
        Scalar::Float(x) => x.inv().map(Scalar::Float),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rational_sum_is_exact() {
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
    }

    #[test]
    fn rational_normalizes() {
        let r = q(2, 4);
        assert_eq!(r.to_string(), "1/2");
        assert_eq!(q(6, -3).to_string(), "-2");
        assert_eq!("10/-4".parse::<Rational>().unwrap(), q(-5, 2));
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(q(2, 3).inv().unwrap(), q(3, 2));
        assert_eq!(q(7, 5) * q(7, 5).inv().unwrap(), Rational::one());
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn float_tolerant_equality() {
        assert_eq!(Float64(0.1) + Float64(0.2), Float64(0.3));
        assert_ne!(Float64(1.0), Float64(1.0 + 1e-6));
        assert_eq!(Float64(1e-13), Float64(0.0));
    }

    #[test]
    fn dynamic_scalars_check_mode() {
        let a = Scalar::Rational(q(1, 2));
        let b = Scalar::Float(Float64(0.5));
        assert_eq!(scalar_add(&a, &b), Err(Error::ModeMismatch));
        assert_eq!(scalar_add(&a, &a).unwrap(), Scalar::Rational(q(1, 1)));
        assert_eq!(scalar_mul(&b, &b).unwrap(), Scalar::Float(Float64(0.25)));
        assert_eq!(scalar_inv(&Scalar::Rational(Rational::zero())), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_round_trip() {
        let r = q(-7, 3);
        assert_eq!(Rational::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(Rational::from_json(&serde_json::json!(50)).unwrap(), q(50, 1));
        assert!(Rational::from_json(&serde_json::json!(0.5)).is_err());
        assert_eq!(Float64::from_json(&serde_json::json!("1/4")).unwrap(), Float64(0.25));
    }
}
