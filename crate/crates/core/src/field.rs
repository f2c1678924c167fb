//! Number fields for amplitudes: double-precision complex numbers, and exact
//! elements of `Q(√2)(i)` for certification.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Tolerance for every floating-point equality in the crate.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldKind {
    Float,
    QSqrt2,
}

impl FieldKind {
    pub fn tag(self) -> &'static str {
        match self {
            FieldKind::Float => "float",
            FieldKind::QSqrt2 => "qsqrt2",
        }
    }
}

/// An ordered real field (or its floating-point stand-in).
pub trait Real:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact equality, or equality within [`FLOAT_TOL`] for floats.
    fn approx_eq(&self, other: &Self) -> bool;
    /// `>= 0`, allowing `-FLOAT_TOL` slack for floats.
    fn is_nonneg(&self) -> bool;
    /// Strictly positive beyond the tolerance.
    fn is_positive(&self) -> bool;
    fn recip(&self) -> Self;
    fn is_exact_zero(&self) -> bool;
}

/// Complex amplitude type.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Real: Real;
    const KIND: FieldKind;

    fn from_parts(re: Self::Real, im: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;

    fn zero() -> Self {
        Self::from_parts(Real::zero(), Real::zero())
    }
    fn one() -> Self {
        Self::from_real(Real::one())
    }
    fn from_real(r: Self::Real) -> Self {
        Self::from_parts(r, Real::zero())
    }
    fn conj(&self) -> Self {
        Self::from_parts(self.re(), -self.im())
    }
    fn norm_sqr(&self) -> Self::Real {
        self.re() * self.re() + self.im() * self.im()
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self.re().approx_eq(&other.re()) && self.im().approx_eq(&other.im())
    }
    fn scale(&self, r: &Self::Real) -> Self {
        Self::from_parts(self.re() * r.clone(), self.im() * r.clone())
    }
    /// Multiplicative inverse; callers ensure `self` is nonzero.
    fn recip(&self) -> Self {
        let inv = self.norm_sqr().recip();
        self.conj().scale(&inv)
    }
    /// Square root of a nonnegative real, if it lies in the field.
    fn sqrt_real(r: &Self::Real) -> Option<Self::Real>;

    fn to_json(&self) -> Result<Value>;
    fn from_json(v: &Value) -> Result<Self>;
}

// ----- floats -----

impl Real for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= FLOAT_TOL
    }
    fn is_nonneg(&self) -> bool {
        *self >= -FLOAT_TOL
    }
    fn is_positive(&self) -> bool {
        *self > FLOAT_TOL
    }
    fn recip(&self) -> Self {
        1.0 / self
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for Complex64 {
    type Real = f64;
    const KIND: FieldKind = FieldKind::Float;

    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
    fn re(&self) -> f64 {
        self.re
    }
    fn im(&self) -> f64 {
        self.im
    }
    fn sqrt_real(r: &f64) -> Option<f64> {
        (*r >= 0.0).then(|| r.sqrt())
    }
    fn to_json(&self) -> Result<Value> {
        Ok(json!([self.re, self.im]))
    }
    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Json(format!("float scalar must be [re, im], got {v}"));
        let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
        let re = arr[0].as_f64().ok_or_else(bad)?;
        let im = arr[1].as_f64().ok_or_else(bad)?;
        Ok(Complex64::new(re, im))
    }
}

// ----- exact Q(√2) -----

/// `a + b√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

fn rational_to_json(r: &Rational) -> Result<Value> {
    let num = r
        .numer()
        .to_i64()
        .ok_or_else(|| Error::Inexact(format!("numerator of {r} exceeds i64")))?;
    let den = r
        .denom()
        .to_i64()
        .ok_or_else(|| Error::Inexact(format!("denominator of {r} exceeds i64")))?;
    Ok(json!([num, den]))
}

/// `[num, den]` with integer entries and nonzero denominator.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let bad = || Error::Json(format!("rational must be [num, den], got {v}"));
    let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
    let num = arr[0].as_i64().ok_or_else(bad)?;
    let den = arr[1].as_i64().ok_or_else(bad)?;
    if den == 0 {
        return Err(Error::Json("zero denominator".into()));
    }
    Ok(rational(num, den))
}

pub fn rational_json(r: &Rational) -> Result<Value> {
    rational_to_json(r)
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt2 {
            a,
            b: Rational::zero(),
        }
    }

    /// `num/den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rational(num, den))
    }

    /// `√2 * num/den`.
    pub fn sqrt2_ratio(num: i64, den: i64) -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: rational(num, den),
        }
    }

    fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a^2 with 2 b^2
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b * rational(2, 1);
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// `(c + d√2)` with `(c + d√2)^2 = self` and `c + d√2 >= 0`, if one exists.
    pub fn sqrt(&self) -> Option<QSqrt2> {
        if self.signum() == Ordering::Less {
            return None;
        }
        if self.b.is_zero() {
            if let Some(c) = rational_sqrt(&self.a) {
                return Some(QSqrt2::from_rational(c));
            }
            let half = &self.a / rational(2, 1);
            return rational_sqrt(&half).map(|d| QSqrt2::new(Rational::zero(), d));
        }
        let disc = &self.a * &self.a - &self.b * &self.b * rational(2, 1);
        let s = rational_sqrt(&disc)?;
        for c2 in [
            (&self.a + &s) / rational(2, 1),
            (&self.a - &s) / rational(2, 1),
        ] {
            let Some(c) = rational_sqrt(&c2) else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            let d = &self.b / (&c * rational(2, 1));
            let mut root = QSqrt2::new(c, d);
            if root.clone() * root.clone() == *self {
                if root.signum() == Ordering::Less {
                    root = -root;
                }
                return Some(root);
            }
        }
        None
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        let two = rational(2, 1);
        QSqrt2::new(
            &self.a * &o.a + &self.b * &o.b * two,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a, -self.b)
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl Real for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::ratio(0, 1)
    }
    fn one() -> Self {
        QSqrt2::ratio(1, 1)
    }
    fn from_i64(v: i64) -> Self {
        QSqrt2::ratio(v, 1)
    }
    fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
    fn is_nonneg(&self) -> bool {
        self.signum() != Ordering::Less
    }
    fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }
    fn recip(&self) -> Self {
        // (a - b√2) / (a^2 - 2 b^2)
        let norm = &self.a * &self.a - &self.b * &self.b * rational(2, 1);
        QSqrt2::new(&self.a / &norm, -(&self.b / &norm))
    }
    fn is_exact_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}√2", self.a, -&self.b),
            (false, false) => write!(f, "{} + {}√2", self.a, self.b),
        }
    }
}

/// `(a + b√2) + (c + d√2)i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QComplex {
    pub re: QSqrt2,
    pub im: QSqrt2,
}

impl QComplex {
    pub fn real(re: QSqrt2) -> Self {
        QComplex {
            re,
            im: Real::zero(),
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for QComplex {
    type Output = QComplex;
    fn add(self, o: QComplex) -> QComplex {
        QComplex {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for QComplex {
    type Output = QComplex;
    fn sub(self, o: QComplex) -> QComplex {
        QComplex {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for QComplex {
    type Output = QComplex;
    fn mul(self, o: QComplex) -> QComplex {
        QComplex {
            re: self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Debug for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_exact_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_exact_zero() {
            write!(f, "({})i", self.im)
        } else {
            write!(f, "{} + ({})i", self.re, self.im)
        }
    }
}

impl Scalar for QComplex {
    type Real = QSqrt2;
    const KIND: FieldKind = FieldKind::QSqrt2;

    fn from_parts(re: QSqrt2, im: QSqrt2) -> Self {
        QComplex { re, im }
    }
    fn re(&self) -> QSqrt2 {
        self.re.clone()
    }
    fn im(&self) -> QSqrt2 {
        self.im.clone()
    }
    fn sqrt_real(r: &QSqrt2) -> Option<QSqrt2> {
        r.sqrt()
    }
    fn to_json(&self) -> Result<Value> {
        Ok(Value::Array(vec![
            rational_to_json(&self.re.a)?,
            rational_to_json(&self.re.b)?,
            rational_to_json(&self.im.a)?,
            rational_to_json(&self.im.b)?,
        ]))
    }
    fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::Json(format!("qsqrt2 scalar must have 4 rationals, got {v}")))?;
        let r: Vec<Rational> = arr.iter().map(rational_from_json).collect::<Result<_>>()?;
        Ok(QComplex {
            re: QSqrt2::new(r[0].clone(), r[1].clone()),
            im: QSqrt2::new(r[2].clone(), r[3].clone()),
        })
    }
}
