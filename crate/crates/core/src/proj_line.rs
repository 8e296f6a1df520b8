//! The real projective line as an abelian group, in homogeneous coordinates.
//!
//! Affine points `x` are `[x : 1]`, the point at infinity is `[1 : 0]`. The group law
//! `x + y = (x + y)/(1 − xy)` becomes the bilinear map
//! `[x₀ : x₁] + [y₀ : y₁] = [x₀y₁ + x₁y₀ : x₁y₁ − x₀y₀]`, with unit `0` and the
//! single element of order two at `∞`.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::scalars::{parse_rational, GaussRational, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error("[0 : 0] is not a point of the projective line")]
    ZeroVector,
    #[error("cross-ratio needs at least three distinct points")]
    DegenerateCrossRatio,
    #[error("point at infinity has no affine coordinate")]
    NotAffine,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A point `[a : b]` kept in canonical form: `b = 1`, or `(a, b) = (1, 0)` for `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PPoint<S> {
    a: S,
    b: S,
}

/// Point with rational coordinates.
pub type QPoint = PPoint<Rational>;
/// Point with Gaussian-rational coordinates.
pub type GPoint = PPoint<GaussRational>;

impl<S: Scalar> PPoint<S> {
    /// Class of the nonzero vector `(a, b)`.
    pub fn new(a: S, b: S) -> Result<Self, ProjError> {
        if b.is_zero() {
            if a.is_zero() {
                return Err(ProjError::ZeroVector);
            }
            return Ok(Self::infinity());
        }
        let a = a.div(&b)?;
        Ok(Self { a, b: S::one() })
    }

    pub fn affine(x: S) -> Self {
        Self { a: x, b: S::one() }
    }

    pub fn infinity() -> Self {
        Self { a: S::one(), b: S::zero() }
    }

    pub fn zero() -> Self {
        Self::affine(S::zero())
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }

    /// Canonical homogeneous coordinates `(a, b)`.
    pub fn coords(&self) -> (&S, &S) {
        (&self.a, &self.b)
    }

    pub fn to_affine(&self) -> Result<S, ProjError> {
        if self.is_infinity() {
            Err(ProjError::NotAffine)
        } else {
            Ok(self.a.clone())
        }
    }

    /// Group law. Fails only if both output coordinates vanish, which happens for
    /// `x = ±i, y = ∓i` over ℚ(i) and never over a real field.
    pub fn try_add(&self, other: &Self) -> Result<Self, ProjError> {
        let (x0, x1) = (&self.a, &self.b);
        let (y0, y1) = (&other.a, &other.b);
        Self::new(x0.mul(y1).add(&x1.mul(y0)), x1.mul(y1).sub(&x0.mul(y0)))
    }

    /// `[−x₀ : x₁]`; fixes `0` and `∞`.
    pub fn negate(&self) -> Self {
        if self.is_infinity() {
            return self.clone();
        }
        Self { a: self.a.neg(), b: self.b.clone() }
    }

    /// The involution `x ↦ 1/x`, i.e. `[x₁ : x₀]`.
    pub fn invert(&self) -> Self {
        Self::new(self.b.clone(), self.a.clone()).expect("swapping a nonzero vector stays nonzero")
    }

    /// `n`-fold sum by binary doubling; negative `n` sums the negation.
    pub fn try_mul_n(&self, n: i64) -> Result<Self, ProjError> {
        let mut base = if n < 0 { self.negate() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Self::zero();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_add(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_add(&base)?;
            }
        }
        Ok(acc)
    }
}

/// `x₀y₁ − x₁y₀` for the representatives; zero iff the points coincide.
fn bracket<S: Scalar>(x: &PPoint<S>, y: &PPoint<S>) -> S {
    x.a.mul(&y.b).sub(&y.a.mul(&x.b))
}

/// Cross-ratio `(x₀₁/x₀₂)(x₂₃/x₁₃)` with `xᵢⱼ = xᵢ − xⱼ`, evaluated on homogeneous
/// coordinates so that `∞` is an ordinary argument. `cross_ratio(0, x, 1, ∞) = x`.
pub fn cross_ratio<S: Scalar>(
    x0: &PPoint<S>,
    x1: &PPoint<S>,
    x2: &PPoint<S>,
    x3: &PPoint<S>,
) -> Result<PPoint<S>, ProjError> {
    let pts = [x0, x1, x2, x3];
    let mut distinct: Vec<&PPoint<S>> = Vec::new();
    for p in pts {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() < 3 {
        return Err(ProjError::DegenerateCrossRatio);
    }
    let num = bracket(x0, x1).mul(&bracket(x2, x3));
    let den = bracket(x0, x2).mul(&bracket(x1, x3));
    PPoint::new(num, den)
}

// ---- rational specializations: the law is total over ℚ ----

impl QPoint {
    pub fn from_rational(x: Rational) -> Self {
        Self::affine(x)
    }

    pub fn from_int(x: i64) -> Self {
        Self::affine(Rational::from_integer(BigInt::from(x)))
    }

    /// Larger of the heights of the canonical coordinates.
    pub fn height(&self) -> BigInt {
        if self.is_infinity() {
            BigInt::from(1)
        } else {
            crate::scalars::height(&self.a)
        }
    }

    pub fn is_negative_affine(&self) -> bool {
        !self.is_infinity() && self.a.is_negative()
    }
}

/// Group law on ℙ¹(ℚ). Total: the output vector has squared length
/// `(x₀² + x₁²)(y₀² + y₁²) > 0`.
pub fn pp_add(x: &QPoint, y: &QPoint) -> QPoint {
    x.try_add(y).expect("group law is total over the rationals")
}

pub fn pp_neg(x: &QPoint) -> QPoint {
    x.negate()
}

pub fn pp_inv(x: &QPoint) -> QPoint {
    x.invert()
}

pub fn pp_mul_n(n: i64, x: &QPoint) -> QPoint {
    x.try_mul_n(n).expect("group law is total over the rationals")
}

impl Add for &QPoint {
    type Output = QPoint;
    fn add(self, other: &QPoint) -> QPoint {
        pp_add(self, other)
    }
}

impl Neg for &QPoint {
    type Output = QPoint;
    fn neg(self) -> QPoint {
        self.negate()
    }
}

impl<S: Scalar> fmt::Display for PPoint<S> {
    /// Affine value, or `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.a)
        }
    }
}

impl FromStr for QPoint {
    type Err = ProjError;

    /// `inf` (also `∞`) or a rational accepted by [`parse_rational`].
    fn from_str(s: &str) -> Result<Self, ProjError> {
        match s.trim() {
            "inf" | "∞" | "Infinity" => Ok(Self::infinity()),
            t => Ok(Self::affine(parse_rational(t)?)),
        }
    }
}

impl FromStr for GPoint {
    type Err = ProjError;

    fn from_str(s: &str) -> Result<Self, ProjError> {
        match s.trim() {
            "inf" | "∞" | "Infinity" => Ok(Self::infinity()),
            t => Ok(Self::affine(t.parse::<GaussRational>()?)),
        }
    }
}
