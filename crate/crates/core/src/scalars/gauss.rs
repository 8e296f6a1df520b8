use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use super::ScalarError;

/// Exact element `re + i·im` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn mul_i(&self) -> Self {
        Self { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

/// Exact product; free-function form of `Mul`.
pub fn gauss_mul(z: &GaussRational, w: &GaussRational) -> GaussRational {
    z * w
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl fmt::Display for GaussRational {
    /// `a+bi` with exact parts; pure reals and pure imaginaries print without the zero part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_abs = self.im.abs();
        let coef = if im_abs.is_one() { String::new() } else { im_abs.to_string() };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_negative() => write!(f, "-{coef}i"),
            (true, false) => write!(f, "{coef}i"),
            (false, false) if self.im.is_negative() => write!(f, "{}-{coef}i", self.re),
            (false, false) => write!(f, "{}+{coef}i", self.re),
        }
    }
}

impl FromStr for GaussRational {
    type Err = ScalarError;

    /// Accepts the forms written by `Display`: `a`, `bi`, `a+bi`, `a-bi`, plus `i` and `-i`.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let bad = || ScalarError::Parse(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(t).map_err(|_| bad())?));
        };
        // split at the last sign that is not leading and not part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other).map_err(|_| bad())?,
        };
        Ok(Self::new(parse_rational(re).map_err(|_| bad())?, im))
    }
}
