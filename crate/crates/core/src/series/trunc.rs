use std::fmt;

use num_traits::{One, Zero};

use super::SeriesError;
use crate::scalars::Rational;

/// Power series over ℚ truncated after degree `order`; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Pads with zeros or drops terms above `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The series `x` (zero when `order = 0`).
    pub fn x(order: usize) -> Self {
        Self::from_ints(order, &[0, 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// `self ∘ inner`, by Horner's rule. `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `r` with `self ∘ r = x`. Requires `s(0) = 0` and `s'(0) ≠ 0`.
    ///
    /// Coefficients are fixed one degree at a time: with `r` known through degree `k−1`,
    /// the degree-`k` coefficient of `s ∘ r` is `s₁·r_k + (terms in r₁..r_{k−1})`.
    pub fn reverse(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let lead = self.coeffs[1].clone();
        if lead.is_zero() {
            return Err(SeriesError::NotReversible);
        }
        let mut r = Self::zero(n);
        r.coeffs[1] = lead.recip();
        for k in 2..=n {
            let c = self.compose(&r)?.coeffs[k].clone();
            r.coeffs[k] = -(c / &lead);
        }
        Ok(r)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = c0.recip();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(acc / &c0);
        }
        Ok(Self { coeffs: out })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `Σ_{k≥0} (−1)^k x^{2k+1}/(2k+1)` through degree `order`.
pub fn arctan_series(order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|d| {
            if d % 2 == 0 {
                Rational::zero()
            } else {
                let sign = if (d / 2) % 2 == 0 { 1 } else { -1 };
                Rational::new(sign.into(), (d as i64).into())
            }
        })
        .collect();
    TruncSeries { coeffs }
}

/// Tangent series, obtained as the compositional inverse of [`arctan_series`].
pub fn tan_series(order: usize) -> TruncSeries {
    arctan_series(order).reverse().expect("arctan has unit linear term")
}

/// `[n](x) = tan(n·arctan x)`: the `n`-fold formal sum of `x`.
pub fn n_series(n: i64, order: usize) -> TruncSeries {
    let inner = arctan_series(order).scale(&Rational::from_integer(n.into()));
    tan_series(order).compose(&inner).expect("equal orders, zero constant term")
}
