//! Binary hypercomplex algebras: the Cayley-Dickson chain and dual numbers.
//!
//! Doubling convention, for `x = (a', b')` and `y = (a'', b'')`:
//!
//! ```text
//! x y = (a' a'' - conj(b'') b',  b'' a' + b' conj(a''))
//! conj((a, b)) = (conj(a), -b)
//! ```
//!
//! Coordinates follow the doubling order, so level 2 is `(1, i1, i2, i1 i2)`
//! and the octonion units are `e1 = i1, e2 = i2, e3 = i1 i2, e4 = i3, e5 = i1 i3,
//! e6 = i2 i3, e7 = i1 i2 i3`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numeric::{Field, Float64, Rational};

/// Highest level with division-algebra guarantees.
pub const MAX_DIVISION_LEVEL: u32 = 3;

/// An algebra that can sit in the entries of a cyclic shift matrix.
///
/// `Kind` separates incompatible members of one Rust type, such as
/// Cayley-Dickson elements of different levels.
pub trait Coefficient: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Scalar: Field;
    type Kind: Copy + Eq + fmt::Debug + Send + Sync + 'static;

    fn kind(&self) -> Self::Kind;
    fn zero_of(kind: Self::Kind) -> Self;
    fn one_of(kind: Self::Kind) -> Self;
    /// Real dimension of the algebra.
    fn dim_of(kind: Self::Kind) -> usize;
    fn name_of(kind: Self::Kind) -> String;
    fn is_associative_kind(kind: Self::Kind) -> bool;

    fn times(&self, rhs: &Self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, s: &Self::Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inverse(&self) -> Option<Self>;
    /// `None` when the algebra has no norm.
    fn norm_sq(&self) -> Option<Self::Scalar>;

    fn coords(&self) -> Vec<Self::Scalar>;
    fn from_coords(kind: Self::Kind, coords: Vec<Self::Scalar>) -> Result<Self>;
    fn to_json(&self) -> Value;
    fn from_json(kind: Self::Kind, v: &Value) -> Result<Self>;
    fn sample<R: Rng + ?Sized>(kind: Self::Kind, rng: &mut R) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    fn name(&self) -> String {
        Self::name_of(self.kind())
    }
}

/// A scalar field that is also its own one-dimensional coefficient algebra.
pub trait Real: Field + Coefficient<Kind = (), Scalar = Self> {}

impl<T: Field + Coefficient<Kind = (), Scalar = T>> Real for T {}

macro_rules! scalar_coefficient {
    ($ty:ty) => {
        impl Coefficient for $ty {
            type Scalar = $ty;
            type Kind = ();

            fn kind(&self) {}
            fn zero_of(_: ()) -> Self {
                <$ty as Field>::zero()
            }
            fn one_of(_: ()) -> Self {
                <$ty as Field>::one()
            }
            fn dim_of(_: ()) -> usize {
                1
            }
            fn name_of(_: ()) -> String {
                "R".into()
            }
            fn is_associative_kind(_: ()) -> bool {
                true
            }
            fn times(&self, rhs: &Self) -> Self {
                self.clone() * rhs.clone()
            }
            fn plus(&self, rhs: &Self) -> Self {
                self.clone() + rhs.clone()
            }
            fn negate(&self) -> Self {
                -self.clone()
            }
            fn scale(&self, s: &Self) -> Self {
                self.clone() * s.clone()
            }
            fn is_zero(&self) -> bool {
                Field::is_zero(self)
            }
            fn try_inverse(&self) -> Option<Self> {
                self.inv().ok()
            }
            fn norm_sq(&self) -> Option<Self> {
                Some(self.square())
            }
            fn coords(&self) -> Vec<Self> {
                vec![self.clone()]
            }
            fn from_coords(_: (), coords: Vec<Self>) -> Result<Self> {
                match <[Self; 1]>::try_from(coords) {
                    Ok([x]) => Ok(x),
                    Err(v) => Err(Error::DimMismatch { expected: 1, found: v.len() }),
                }
            }
            fn to_json(&self) -> Value {
                Field::to_json(self)
            }
            fn from_json(_: (), v: &Value) -> Result<Self> {
                <$ty as Field>::from_json(v)
            }
            fn sample<R: Rng + ?Sized>(_: (), rng: &mut R) -> Self {
                <$ty as Field>::sample(rng)
            }
        }
    };
}

scalar_coefficient!(Rational);
scalar_coefficient!(Float64);

/// Element of the level-`ℓ` Cayley-Dickson algebra, `2^ℓ` real coordinates.
#[derive(Clone, PartialEq)]
pub struct CdElement<S> {
    level: u32,
    coeffs: Vec<S>,
}

impl<S: Field> CdElement<S> {
    pub fn new(level: u32, coeffs: Vec<S>) -> Result<Self> {
        let expected = 1usize << level;
        if coeffs.len() != expected {
            return Err(Error::DimMismatch { expected, found: coeffs.len() });
        }
        Ok(CdElement { level, coeffs })
    }

    /// Infers the level from the coordinate count, which must be a power of two.
    pub fn from_coeffs(coeffs: Vec<S>) -> Result<Self> {
        let n = coeffs.len();
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::InvalidDimension(n));
        }
        Ok(CdElement { level: n.trailing_zeros(), coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn zero(level: u32) -> Self {
        CdElement { level, coeffs: vec![S::zero(); 1 << level] }
    }

    pub fn one(level: u32) -> Self {
        Self::basis(level, 0)
    }

    /// The `index`-th canonical basis element; index 0 is the unit.
    pub fn basis(level: u32, index: usize) -> Self {
        let mut e = Self::zero(level);
        e.coeffs[index] = S::one();
        e
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn real_part(&self) -> &S {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        cd_mul(self, rhs)
    }

    pub fn conj(&self) -> Self {
        cd_conj(self)
    }

    pub fn norm_sq(&self) -> S {
        cd_norm_sq(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        cd_inverse(self)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_level(rhs)?;
        Ok(self.zip(rhs, |a, b| a.clone() + b.clone()))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_level(rhs)?;
        Ok(self.zip(rhs, |a, b| a.clone() - b.clone()))
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    fn check_level(&self, rhs: &Self) -> Result<()> {
        if self.level != rhs.level {
            return Err(Error::LevelMismatch { left: self.level, right: rhs.level });
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        CdElement { level: self.level, coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect();
        CdElement { level: self.level, coeffs }
    }
}

impl<S: Field> fmt::Debug for CdElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CD{}{:?}", self.level, self.coeffs)
    }
}

fn conj_slice<S: Field>(x: &[S]) -> Vec<S> {
    let mut out: Vec<S> = x.iter().map(|c| -c.clone()).collect();
    out[0] = x[0].clone();
    out
}

fn mul_slice<S: Field>(x: &[S], y: &[S]) -> Vec<S> {
    if x.len() == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let half = x.len() / 2;
    let (a1, b1) = x.split_at(half);
    let (a2, b2) = y.split_at(half);
    let left = mul_slice(a1, a2).into_iter().zip(mul_slice(&conj_slice(b2), b1)).map(|(p, q)| p - q);
    let right = mul_slice(b2, a1).into_iter().zip(mul_slice(b1, &conj_slice(a2))).map(|(p, q)| p + q);
    left.chain(right).collect()
}

pub fn cd_mul<S: Field>(x: &CdElement<S>, y: &CdElement<S>) -> Result<CdElement<S>> {
    x.check_level(y)?;
    Ok(CdElement { level: x.level, coeffs: mul_slice(&x.coeffs, &y.coeffs) })
}

pub fn cd_conj<S: Field>(x: &CdElement<S>) -> CdElement<S> {
    CdElement { level: x.level, coeffs: conj_slice(&x.coeffs) }
}

pub fn cd_norm_sq<S: Field>(x: &CdElement<S>) -> S {
    x.coeffs.iter().fold(S::zero(), |acc, c| acc + c.square())
}

pub fn cd_inverse<S: Field>(x: &CdElement<S>) -> Result<CdElement<S>> {
    if x.level > MAX_DIVISION_LEVEL {
        return Err(Error::NotDivisionAlgebra(x.level));
    }
    let n = cd_norm_sq(x);
    if Field::is_zero(&n) {
        return Err(Error::DivisionByZero);
    }
    Ok(cd_conj(x).scale(&n.inv()?))
}

impl<S: Field> Coefficient for CdElement<S> {
    type Scalar = S;
    type Kind = u32;

    fn kind(&self) -> u32 {
        self.level
    }
    fn zero_of(level: u32) -> Self {
        Self::zero(level)
    }
    fn one_of(level: u32) -> Self {
        Self::one(level)
    }
    fn dim_of(level: u32) -> usize {
        1 << level
    }
    fn name_of(level: u32) -> String {
        match level {
            0 => "R".into(),
            1 => "C".into(),
            2 => "H".into(),
            3 => "O".into(),
            l => format!("CD{l}"),
        }
    }
    fn is_associative_kind(level: u32) -> bool {
        level <= 2
    }
    fn times(&self, rhs: &Self) -> Self {
        cd_mul(self, rhs).expect("coefficients share a level")
    }
    fn plus(&self, rhs: &Self) -> Self {
        CdElement::add(self, rhs).expect("coefficients share a level")
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn scale(&self, s: &S) -> Self {
        CdElement::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        CdElement::is_zero(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        cd_inverse(self).ok()
    }
    fn norm_sq(&self) -> Option<S> {
        Some(cd_norm_sq(self))
    }
    fn coords(&self) -> Vec<S> {
        self.coeffs.clone()
    }
    fn from_coords(level: u32, coords: Vec<S>) -> Result<Self> {
        Self::new(level, coords)
    }
    fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "coeffs": self.coeffs.iter().map(Field::to_json).collect::<Vec<_>>(),
        })
    }
    fn from_json(level: u32, v: &Value) -> Result<Self> {
        let x = cd_from_json(v)?;
        if x.level != level {
            return Err(Error::LevelMismatch { left: level, right: x.level });
        }
        Ok(x)
    }
    fn sample<R: Rng + ?Sized>(level: u32, rng: &mut R) -> Self {
        CdElement { level, coeffs: (0..1 << level).map(|_| S::sample(rng)).collect() }
    }
}

/// Parses `{"level": l, "coeffs": [...]}` or a bare coordinate array.
pub fn cd_from_json<S: Field>(v: &Value) -> Result<CdElement<S>> {
    let (level, coeffs) = match v {
        Value::Array(items) => (None, items),
        Value::Object(map) => {
            let coeffs = map
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("CD element needs a \"coeffs\" array".into()))?;
            let level = match map.get("level") {
                Some(l) => {
                    Some(l.as_u64().filter(|&l| l < 16).ok_or_else(|| Error::Malformed(format!("bad level {l}")))?
                        as u32)
                }
                None => None,
            };
            (level, coeffs)
        }
        other => return Err(Error::Malformed(format!("expected a CD element, got {other}"))),
    };
    let coeffs = coeffs.iter().map(S::from_json).collect::<Result<Vec<_>>>()?;
    let x = match level {
        Some(l) => CdElement::new(l, coeffs),
        None => CdElement::from_coeffs(coeffs),
    };
    x.map_err(|e| Error::Malformed(e.to_string()))
}

/// Dual number `a + b ε` with `ε² = 0`.
#[derive(Clone, PartialEq)]
pub struct DualNumber<S> {
    pub a: S,
    pub b: S,
}

impl<S: Field> DualNumber<S> {
    pub fn new(a: S, b: S) -> Self {
        DualNumber { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        DualNumber { a: S::from_i64(a), b: S::from_i64(b) }
    }

    pub fn epsilon() -> Self {
        DualNumber { a: S::zero(), b: S::one() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        dual_mul(self, rhs)
    }

    /// Invertible exactly when the real part is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let inv_a = self.a.inv()?;
        let b = -(self.b.clone() * inv_a.square());
        Ok(DualNumber { a: inv_a, b })
    }
}

impl<S: Field> fmt::Debug for DualNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}ε)", self.a, self.b)
    }
}

pub fn dual_mul<S: Field>(x: &DualNumber<S>, y: &DualNumber<S>) -> DualNumber<S> {
    DualNumber { a: x.a.clone() * y.a.clone(), b: x.a.clone() * y.b.clone() + x.b.clone() * y.a.clone() }
}

impl<S: Field> Coefficient for DualNumber<S> {
    type Scalar = S;
    type Kind = ();

    fn kind(&self) {}
    fn zero_of(_: ()) -> Self {
        DualNumber { a: S::zero(), b: S::zero() }
    }
    fn one_of(_: ()) -> Self {
        DualNumber { a: S::one(), b: S::zero() }
    }
    fn dim_of(_: ()) -> usize {
        2
    }
    fn name_of(_: ()) -> String {
        "dual".into()
    }
    fn is_associative_kind(_: ()) -> bool {
        true
    }
    fn times(&self, rhs: &Self) -> Self {
        dual_mul(self, rhs)
    }
    fn plus(&self, rhs: &Self) -> Self {
        DualNumber { a: self.a.clone() + rhs.a.clone(), b: self.b.clone() + rhs.b.clone() }
    }
    fn negate(&self) -> Self {
        DualNumber { a: -self.a.clone(), b: -self.b.clone() }
    }
    fn scale(&self, s: &S) -> Self {
        DualNumber { a: self.a.clone() * s.clone(), b: self.b.clone() * s.clone() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn norm_sq(&self) -> Option<S> {
        None
    }
    fn coords(&self) -> Vec<S> {
        vec![self.a.clone(), self.b.clone()]
    }
    fn from_coords(_: (), coords: Vec<S>) -> Result<Self> {
        match <[S; 2]>::try_from(coords) {
            Ok([a, b]) => Ok(DualNumber { a, b }),
            Err(v) => Err(Error::DimMismatch { expected: 2, found: v.len() }),
        }
    }
    fn to_json(&self) -> Value {
        json!({ "a": self.a.to_json(), "b": self.b.to_json() })
    }
    fn from_json(_: (), v: &Value) -> Result<Self> {
        match v {
            Value::Object(map) => {
                let get = |k: &str| {
                    map.get(k)
                        .ok_or_else(|| Error::Malformed(format!("dual number needs {k:?}")))
                        .and_then(S::from_json)
                };
                Ok(DualNumber { a: get("a")?, b: get("b")? })
            }
            Value::Array(items) if items.len() == 2 => {
                Ok(DualNumber { a: S::from_json(&items[0])?, b: S::from_json(&items[1])? })
            }
            other => Err(Error::Malformed(format!("expected a dual number, got {other}"))),
        }
    }
    fn sample<R: Rng + ?Sized>(_: (), rng: &mut R) -> Self {
        DualNumber { a: S::sample(rng), b: S::sample(rng) }
    }
}

/// Coefficient algebras addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    R,
    Dual,
    C,
    H,
    O,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 5] = [AlgebraTag::R, AlgebraTag::Dual, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::R => "R",
            AlgebraTag::Dual => "dual",
            AlgebraTag::C => "C",
            AlgebraTag::H => "H",
            AlgebraTag::O => "O",
        }
    }

    /// Cayley-Dickson level, `None` for dual numbers.
    pub fn cd_level(self) -> Option<u32> {
        match self {
            AlgebraTag::R => Some(0),
            AlgebraTag::C => Some(1),
            AlgebraTag::H => Some(2),
            AlgebraTag::O => Some(3),
            AlgebraTag::Dual => None,
        }
    }

    pub fn dim(self) -> usize {
        match self.cd_level() {
            Some(l) => 1 << l,
            None => 2,
        }
    }

    pub fn is_associative(self) -> bool {
        self != AlgebraTag::O
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "real" => Ok(AlgebraTag::R),
            "dual" | "D" => Ok(AlgebraTag::Dual),
            "C" | "c" | "complex" => Ok(AlgebraTag::C),
            "H" | "h" | "quaternion" => Ok(AlgebraTag::H),
            "O" | "o" | "octonion" => Ok(AlgebraTag::O),
            other => Err(Error::Malformed(format!("unknown algebra {other:?}"))),
        }
    }
}
