//! 2×2 matrices over exact scalars acting on the projective line by fractional linear maps.

use std::fmt;

use thiserror::Error;

use crate::proj_line::{PPoint, ProjError, QPoint};
use crate::scalars::{GaussRational, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MobiusError {
    #[error("matrix is singular (determinant 0)")]
    Singular,
    #[error("J(x) is defined only for affine x; use the limit class at infinity")]
    NotAffine,
    #[error("H(X) is singular at X = {0}: the family blows up at X = ±i")]
    SingularFamily(Box<GaussRational>),
    #[error(transparent)]
    Proj(#[from] ProjError),
}

/// `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<S> {
    pub m00: S,
    pub m01: S,
    pub m10: S,
    pub m11: S,
}

pub type QMat = Mat2<Rational>;
pub type GMat = Mat2<GaussRational>;

impl<S: Scalar> Mat2<S> {
    pub fn new(m00: S, m01: S, m10: S, m11: S) -> Self {
        Self { m00, m01, m10, m11 }
    }

    pub fn identity() -> Self {
        Self::diag(S::one(), S::one())
    }

    pub fn diag(a: S, d: S) -> Self {
        Self::new(a, S::zero(), S::zero(), d)
    }

    fn entries(&self) -> [&S; 4] {
        [&self.m00, &self.m01, &self.m10, &self.m11]
    }

    pub fn det(&self) -> S {
        self.m00.mul(&self.m11).sub(&self.m01.mul(&self.m10))
    }

    pub fn trace(&self) -> S {
        self.m00.add(&self.m11)
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.m00.mul(&o.m00).add(&self.m01.mul(&o.m10)),
            self.m00.mul(&o.m01).add(&self.m01.mul(&o.m11)),
            self.m10.mul(&o.m00).add(&self.m11.mul(&o.m10)),
            self.m10.mul(&o.m01).add(&self.m11.mul(&o.m11)),
        )
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.m00.mul(c), self.m01.mul(c), self.m10.mul(c), self.m11.mul(c))
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// A nonzero multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.m01.is_zero() && self.m10.is_zero() && self.m00 == self.m11 && !self.m00.is_zero()
    }

    /// `[m00·a + m01·b : m10·a + m11·b]`.
    pub fn act(&self, p: &PPoint<S>) -> Result<PPoint<S>, MobiusError> {
        if self.is_singular() {
            return Err(MobiusError::Singular);
        }
        let (a, b) = p.coords();
        let top = self.m00.mul(a).add(&self.m01.mul(b));
        let bottom = self.m10.mul(a).add(&self.m11.mul(b));
        Ok(PPoint::new(top, bottom)?)
    }

    /// Coefficients `(t, d)` of the characteristic polynomial `λ² − tλ + d`.
    pub fn char_poly(&self) -> (S, S) {
        (self.trace(), self.det())
    }

    /// `λ² − tλ + d` evaluated at `lambda`; zero iff `lambda` is an eigenvalue.
    pub fn char_poly_at(&self, lambda: &S) -> S {
        let (t, d) = self.char_poly();
        lambda.mul(lambda).sub(&t.mul(lambda)).add(&d)
    }
}

/// Whether `m = λ·n` for a nonzero scalar `λ`.
///
/// The entry vectors are proportional iff every cross product `mᵢ·nⱼ − mⱼ·nᵢ` vanishes;
/// no determinant normalization (and hence no square root) is involved.
pub fn proj_eq<S: Scalar>(m: &Mat2<S>, n: &Mat2<S>) -> bool {
    let a = m.entries();
    let b = n.entries();
    if a.iter().all(|x| x.is_zero()) || b.iter().all(|x| x.is_zero()) {
        return false;
    }
    (0..4).all(|i| (i + 1..4).all(|j| a[i].mul(b[j]) == a[j].mul(b[i])))
}

/// Least `k ≤ bound` with `m^k` scalar, i.e. the order of `[m]` in PGL₂.
pub fn proj_order<S: Scalar>(m: &Mat2<S>, bound: u32) -> Result<Option<u32>, MobiusError> {
    if m.is_singular() {
        return Err(MobiusError::Singular);
    }
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_scalar() {
            return Ok(Some(k));
        }
        p = p.mul(m);
    }
    Ok(None)
}

pub fn mat_act<S: Scalar>(m: &Mat2<S>, p: &PPoint<S>) -> Result<PPoint<S>, MobiusError> {
    m.act(p)
}

/// `[[1, −i], [1, i]]`, acting as `x ↦ (x − i)/(x + i)`.
pub fn cayley_c() -> GMat {
    let i = GaussRational::i();
    let one = GaussRational::real(Rational::one());
    Mat2::new(one.clone(), -&i, one, i)
}

/// `[[1, −1], [1, 1]]`, acting as `x ↦ (x − 1)/(x + 1)`.
pub fn cayley_bold() -> QMat {
    let one = Rational::one();
    Mat2::new(one.clone(), -one.clone(), one.clone(), one)
}

/// `[[1, x], [−x, 1]]` for affine `x`.
pub fn j_matrix(x: &QPoint) -> Result<QMat, MobiusError> {
    let x = x.to_affine().map_err(|_| MobiusError::NotAffine)?;
    let one = Rational::one();
    Ok(Mat2::new(one.clone(), x.clone(), -x, one))
}

/// `[[0, 1], [−1, 0]]`, the projective limit of `J(x)` as `x → ∞`.
pub fn j_limit_at_infinity() -> QMat {
    Mat2::new(Rational::zero(), Rational::one(), -Rational::one(), Rational::zero())
}

/// `J(x)` on all of ℙ¹(ℚ), using the limit class at `∞`.
pub fn j_class(x: &QPoint) -> QMat {
    j_matrix(x).unwrap_or_else(|_| j_limit_at_infinity())
}

/// `diag(1 + iX, 1 − iX)`; singular exactly at `X = ±i`.
pub fn h_matrix(x: &GaussRational) -> Result<GMat, MobiusError> {
    let one = GaussRational::real(Rational::one());
    let ix = x.mul_i();
    let m = Mat2::diag(&one + &ix, &one - &ix);
    if m.is_singular() {
        return Err(MobiusError::SingularFamily(Box::new(x.clone())));
    }
    Ok(m)
}

/// Writes `m = [[α−δ, −β+γ], [β+γ, α+δ]]` (always solvable) and returns
/// `[[α+iβ, γ+iδ], [γ−iδ, α−iβ]]`.
pub fn sl2_to_su11(m: &QMat) -> GMat {
    let half = Rational::new(1.into(), 2.into());
    let alpha = (&m.m00 + &m.m11) * &half;
    let delta = (&m.m11 - &m.m00) * &half;
    let gamma = (&m.m01 + &m.m10) * &half;
    let beta = (&m.m10 - &m.m01) * &half;
    Mat2::new(
        GaussRational::new(alpha.clone(), beta.clone()),
        GaussRational::new(gamma.clone(), delta.clone()),
        GaussRational::new(gamma, -delta),
        GaussRational::new(alpha, -beta),
    )
}

/// Inverse of [`sl2_to_su11`] on its image.
pub fn su11_to_sl2(m: &GMat) -> Option<QMat> {
    let (alpha, beta) = (m.m00.re.clone(), m.m00.im.clone());
    let (gamma, delta) = (m.m01.re.clone(), m.m01.im.clone());
    let back = sl2_to_su11(&Mat2::new(&alpha - &delta, &gamma - &beta, &beta + &gamma, &alpha + &delta));
    (back == *m).then(|| Mat2::new(&alpha - &delta, &gamma - &beta, &beta + &gamma, alpha + delta))
}

/// Entrywise inclusion ℚ ⊂ ℚ(i).
pub fn to_gauss(m: &QMat) -> GMat {
    Mat2::new(
        GaussRational::real(m.m00.clone()),
        GaussRational::real(m.m01.clone()),
        GaussRational::real(m.m10.clone()),
        GaussRational::real(m.m11.clone()),
    )
}

impl<S: Scalar> fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m00, self.m01, self.m10, self.m11)
    }
}
