use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::bigfloat::BigFloat;

/// Complex number with [`BigFloat`] parts.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        let im = BigFloat::zero(re.prec());
        Self { re, im }
    }

    pub fn from_i64(re: i64, im: i64, prec: u32) -> Self {
        Self { re: BigFloat::from_i64(re, prec), im: BigFloat::from_i64(im, prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> BigFloat {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul_i(&self) -> Self {
        Self { re: -&self.im, im: self.re.clone() }
    }

    /// `e^{iθ}`.
    pub fn cis(theta: &BigFloat) -> Self {
        let (s, c) = theta.sin_cos();
        Self { re: c, im: s }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self { re: &m * &c, im: &m * &s }
    }

    /// Principal logarithm, imaginary part in `(-π, π]`. Panics at zero.
    pub fn ln(&self) -> Self {
        assert!(!self.is_zero(), "logarithm of zero");
        let arg = BigFloat::atan2(&self.im, &self.re);
        Self { re: self.abs().ln(), im: arg }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return Self::from_i64(0, 0, prec);
        }
        let r = self.abs();
        if !self.re.is_negative() {
            let t = (&r + &self.re).mul_pow2(-1).sqrt();
            let im = &self.im / &t.mul_pow2(1);
            Self { re: t, im }
        } else {
            let t = (&r - &self.re).mul_pow2(-1).sqrt();
            let re = &self.im.abs() / &t.mul_pow2(1);
            let im = if self.im.is_negative() { -&t } else { t };
            Self { re, im }
        }
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, o: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, o: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, o: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, o: &BigComplex) -> BigComplex {
        let d = o.norm_sqr();
        let n = self * &o.conj();
        BigComplex { re: &n.re / &d, im: &n.im / &d }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
