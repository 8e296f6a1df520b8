//! High-precision numerics for the covering and character maps.
//!
//! Every entry point lives on [`Analytic`], which fixes the output precision `P` and
//! caches the constants it needs (π and `q = e^π`) at `P + 32` working bits. Points of
//! the projective line are carried as angles `θ ∈ (−π/2, π/2]` standing for `tan θ`,
//! and compared through `exp(2iθ)` on the unit circle.

mod cmat;
mod sample;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use cmat::{spectra_distance, CMat2};
pub use sample::{sample_tau, samples_csv, SampleRow};

use crate::scalars::{BigComplex, BigFloat};

const WORK_BITS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticError {
    #[error("{op}: {msg}")]
    Domain { op: &'static str, msg: String },
    #[error("unknown dihedral generator `{0}` (expected r, s or s^-1)")]
    UnknownGenerator(String),
}

fn domain(op: &'static str, msg: impl Into<String>) -> AnalyticError {
    AnalyticError::Domain { op, msg: msg.into() }
}

/// A point of the two-point compactification `[−∞, +∞]`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtReal {
    Finite(BigFloat),
    PosInf,
    NegInf,
}

impl ExtReal {
    pub fn is_infinite(&self) -> bool {
        !matches!(self, ExtReal::Finite(_))
    }

    pub fn parse(s: &str, prec: u32) -> Result<Self, crate::scalars::ScalarError> {
        match s.trim() {
            "inf" | "+inf" | "∞" => Ok(ExtReal::PosInf),
            "-inf" => Ok(ExtReal::NegInf),
            t => Ok(ExtReal::Finite(BigFloat::parse(t, prec)?)),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::PosInf => f.write_str("inf"),
            ExtReal::NegInf => f.write_str("-inf"),
        }
    }
}

/// `x = sign · qⁿ · mantissa` with `mantissa ∈ [q^{−1/2}, q^{1/2})`.
#[derive(Clone, Debug, PartialEq)]
pub struct QDecomposition {
    pub n: i64,
    pub sign: i8,
    pub mantissa: BigFloat,
}

/// The point `tan θ` of the projective line, `θ ∈ (−π/2, π/2]`; `θ = π/2` is `∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericPPoint {
    theta: BigFloat,
}

impl NumericPPoint {
    pub fn theta(&self) -> &BigFloat {
        &self.theta
    }
}

/// Generators of the infinite dihedral group acting on `ℝ^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dihedral {
    /// `x ↦ 1/x`
    R,
    /// `x ↦ qx`
    S,
    /// `x ↦ x/q`
    SInv,
}

impl FromStr for Dihedral {
    type Err = AnalyticError;
    fn from_str(s: &str) -> Result<Self, AnalyticError> {
        match s.trim() {
            "r" => Ok(Dihedral::R),
            "s" => Ok(Dihedral::S),
            "s^-1" | "s⁻¹" | "si" => Ok(Dihedral::SInv),
            other => Err(AnalyticError::UnknownGenerator(other.to_string())),
        }
    }
}

/// Evaluation context at a fixed output precision.
#[derive(Clone, Debug)]
pub struct Analytic {
    prec: u32,
    wp: u32,
    pi: BigFloat,
    half_pi: BigFloat,
    q: BigFloat,
    ln_q: BigFloat,
    /// `q^{±1/2}` rounded to the output precision: the fundamental interval bounds.
    sqrt_q_lo: BigFloat,
    sqrt_q_hi: BigFloat,
}

impl Analytic {
    pub fn new(prec: u32) -> Self {
        let wp = prec + WORK_BITS;
        let pi = BigFloat::pi(wp);
        let half_pi = pi.mul_pow2(-1);
        let q = pi.exp();
        let ln_q = q.ln();
        let sqrt_q_hi = half_pi.exp().with_prec(prec);
        let sqrt_q_lo = (-&half_pi).exp().with_prec(prec);
        Self { prec, wp, pi, half_pi, q, ln_q, sqrt_q_lo, sqrt_q_hi }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// π at the output precision.
    pub fn pi(&self) -> BigFloat {
        self.pi.with_prec(self.prec)
    }

    /// `q = e^π` at the output precision.
    pub fn q(&self) -> BigFloat {
        self.q.with_prec(self.prec)
    }

    /// `2^{−(P−32)}`, the tolerance of every numeric identity check.
    pub fn tolerance(&self) -> BigFloat {
        BigFloat::from_i64(1, self.prec).mul_pow2(-(self.prec as i64 - 32))
    }

    /// `ulp(1) = 2^{1−P}`.
    pub fn unit_ulp(&self) -> BigFloat {
        BigFloat::from_i64(1, self.prec).mul_pow2(1 - self.prec as i64)
    }

    fn out(&self, x: BigFloat) -> BigFloat {
        x.with_prec(self.prec)
    }

    fn out_c(&self, z: BigComplex) -> BigComplex {
        BigComplex::new(self.out(z.re), self.out(z.im))
    }

    fn w(&self, x: &BigFloat) -> BigFloat {
        x.with_prec(self.wp)
    }

    pub fn float(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.prec)
    }

    // ---- Arctan and the sawtooth ----

    /// Principal arctangent on the two-point compactification, `±∞ ↦ ±π/2`.
    pub fn arctan_ext(&self, x: &ExtReal) -> BigFloat {
        match x {
            ExtReal::Finite(v) => self.out(self.w(v).atan()),
            ExtReal::PosInf => self.out(self.half_pi.clone()),
            ExtReal::NegInf => self.out(-&self.half_pi),
        }
    }

    /// Reduction into `(−π/2, π/2]` at working precision.
    fn sawtooth_wp(&self, theta: &BigFloat) -> BigFloat {
        let t = self.w(theta);
        // n = ⌈t/π − 1/2⌉ puts t − nπ in (−π/2, π/2]
        let half = BigFloat::from_i64(1, self.wp).mul_pow2(-1);
        let n = (&(&t / &self.pi) - &half).ceil();
        let wide = self.wp + 64;
        let mut r = &t - &(&BigFloat::from_bigint(&n, wide) * &BigFloat::pi(wide));
        r = r.with_prec(self.wp);
        if r > self.half_pi {
            r = &r - &self.pi;
        } else if r <= -&self.half_pi {
            r = &r + &self.pi;
        }
        r
    }

    /// `θ − π·round(θ/π)`, the periodic extension of the identity on `(−π/2, π/2]`.
    pub fn sawtooth(&self, theta: &BigFloat) -> BigFloat {
        let r = self.out(self.sawtooth_wp(theta));
        // rounding can land exactly on −π/2 at the output precision
        if r <= -&self.half_pi.with_prec(self.prec) {
            self.out(self.half_pi.clone())
        } else {
            r
        }
    }

    // ---- points of ℙ as angles ----

    fn point_from_theta_wp(&self, theta_wp: BigFloat) -> NumericPPoint {
        let r = self.out(theta_wp);
        let hp = self.half_pi.with_prec(self.prec);
        let theta = if r <= -&hp || r > hp { hp } else { r };
        NumericPPoint { theta }
    }

    /// `tan θ` as a point, for any real `θ`.
    pub fn point_from_angle(&self, theta: &BigFloat) -> NumericPPoint {
        self.point_from_theta_wp(self.sawtooth_wp(theta))
    }

    /// The point with affine coordinate `x`, or `∞`.
    pub fn point(&self, x: &ExtReal) -> NumericPPoint {
        match x {
            ExtReal::Finite(v) => self.point_from_theta_wp(self.w(v).atan()),
            _ => self.infinity(),
        }
    }

    pub fn infinity(&self) -> NumericPPoint {
        NumericPPoint { theta: self.out(self.half_pi.clone()) }
    }

    /// `tan θ`, or `+∞` at `θ = π/2`.
    pub fn affine_value(&self, p: &NumericPPoint) -> ExtReal {
        if p.theta >= self.half_pi.with_prec(self.prec) {
            return ExtReal::PosInf;
        }
        let (s, c) = self.w(&p.theta).sin_cos();
        if c.is_zero() {
            ExtReal::PosInf
        } else {
            ExtReal::Finite(self.out(&s / &c))
        }
    }

    /// Group law on homogeneous coordinates `[sin θ : cos θ]`:
    /// `[x₀y₁ + x₁y₀ : x₁y₁ − x₀y₀]`, converted back to an angle.
    pub fn pp_add(&self, p: &NumericPPoint, q: &NumericPPoint) -> NumericPPoint {
        let (x0, x1) = self.w(&p.theta).sin_cos();
        let (y0, y1) = self.w(&q.theta).sin_cos();
        let a = &(&x0 * &y1) + &(&x1 * &y0);
        let b = &(&x1 * &y1) - &(&x0 * &y0);
        let angle = BigFloat::atan2(&a, &b);
        self.point_from_theta_wp(self.sawtooth_wp(&angle))
    }

    /// `(x + y)/(1 − xy)` on affine values, `∞` when the denominator vanishes.
    pub fn ext_add(&self, x: &BigFloat, y: &BigFloat) -> ExtReal {
        let (x, y) = (self.w(x), self.w(y));
        let den = &BigFloat::from_i64(1, self.wp) - &(&x * &y);
        if den.is_zero() {
            ExtReal::PosInf
        } else {
            ExtReal::Finite(self.out(&(&x + &y) / &den))
        }
    }

    /// `|exp(2iθ_p) − exp(2iθ_q)| ∈ [0, 2]`.
    pub fn chordal_dist(&self, p: &NumericPPoint, q: &NumericPPoint) -> BigFloat {
        let zp = BigComplex::cis(&self.w(&p.theta).mul_pow2(1));
        let zq = BigComplex::cis(&self.w(&q.theta).mul_pow2(1));
        self.out((&zp - &zq).abs())
    }

    // ---- covering map ----

    fn require_nonzero(op: &'static str, x: &BigFloat) -> Result<(), AnalyticError> {
        if x.is_zero() {
            Err(domain(op, "argument must be nonzero"))
        } else {
            Ok(())
        }
    }

    /// `τ(x) = tan log|x|`, stored as `θ = sawtooth(log|x|)`.
    pub fn tau(&self, x: &BigFloat) -> Result<NumericPPoint, AnalyticError> {
        Self::require_nonzero("tau", x)?;
        let l = self.w(&x.abs()).ln();
        Ok(self.point_from_theta_wp(self.sawtooth_wp(&l)))
    }

    /// `x = sign · qⁿ · m` with `m ∈ [q^{−1/2}, q^{1/2})`; a mantissa on the upper
    /// boundary moves to the next exponent.
    pub fn decompose_mod_q(&self, x: &BigFloat) -> Result<QDecomposition, AnalyticError> {
        Self::require_nonzero("decompose_mod_q", x)?;
        let sign = if x.is_negative() { -1 } else { 1 };
        let ax = self.w(&x.abs());
        let l = ax.ln();
        let half = BigFloat::from_i64(1, self.wp).mul_pow2(-1);
        let mut n = num_traits::ToPrimitive::to_i64(&(&(&l / &self.pi) + &half).floor())
            .ok_or_else(|| domain("decompose_mod_q", "exponent out of range"))?;
        let mantissa_at = |n: i64| {
            let scale = (&BigFloat::from_i64(-n, self.wp) * &self.pi).exp();
            (&ax * &scale).with_prec(self.prec)
        };
        let mut m = mantissa_at(n);
        if m >= self.sqrt_q_hi {
            n += 1;
            m = mantissa_at(n);
            if m < self.sqrt_q_lo {
                m = self.sqrt_q_lo.clone();
            }
        } else if m < self.sqrt_q_lo {
            n -= 1;
            m = mantissa_at(n);
            if m >= self.sqrt_q_hi {
                n += 1;
                m = self.sqrt_q_lo.clone();
            }
        }
        Ok(QDecomposition { n, sign, mantissa: m })
    }

    /// `sign · qⁿ · mantissa`.
    pub fn recompose(&self, d: &QDecomposition) -> BigFloat {
        let scale = (&BigFloat::from_i64(d.n, self.wp) * &self.pi).exp();
        let v = self.out(&scale * &self.w(&d.mantissa));
        if d.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// `χ(x) = exp(2i log|x|) = |x|^{2i}`.
    pub fn chi(&self, x: &BigFloat) -> Result<BigComplex, AnalyticError> {
        Self::require_nonzero("chi", x)?;
        let l = self.w(&x.abs()).ln();
        Ok(self.out_c(BigComplex::cis(&l.mul_pow2(1))))
    }

    /// `(x − i)/(x + i) = ((x² − 1) − 2ix)/(x² + 1)`, with `±∞ ↦ 1`.
    pub fn cayley_value(&self, x: &ExtReal) -> BigComplex {
        match x {
            ExtReal::Finite(v) => {
                let v = self.w(v);
                let v2 = v.square();
                let one = BigFloat::from_i64(1, self.wp);
                let den = &v2 + &one;
                let re = &(&v2 - &one) / &den;
                let im = -&(&v.mul_pow2(1) / &den);
                self.out_c(BigComplex::new(re, im))
            }
            _ => BigComplex::from_i64(1, 0, self.prec),
        }
    }

    /// `−exp(2i·Arctan x)`, the second expression for the Cayley transform.
    pub fn cayley_value_via_arctan(&self, x: &ExtReal) -> BigComplex {
        let a = match x {
            ExtReal::Finite(v) => self.w(v).atan(),
            ExtReal::PosInf => self.half_pi.clone(),
            ExtReal::NegInf => -&self.half_pi,
        };
        self.out_c(-&BigComplex::cis(&a.mul_pow2(1)))
    }

    // ---- Mercator logarithm ----

    /// `λ(x) = artanh(sin x)` for `|x| < π/2`.
    pub fn mercator_lambda(&self, x: &BigFloat) -> Result<BigFloat, AnalyticError> {
        let pole = || domain("mercator_lambda", "requires |x| < π/2 (poles at ±π/2)");
        if x.abs() >= self.half_pi.with_prec(self.prec) {
            return Err(pole());
        }
        let s = self.w(x).sin();
        if s.abs() >= BigFloat::from_i64(1, self.wp) {
            return Err(pole());
        }
        Ok(self.out(s.atanh()))
    }

    /// `−log(i·[𝔠](e^{ix}))` with the principal logarithm.
    pub fn mercator_via_cayley(&self, x: &BigFloat) -> BigComplex {
        let w = BigComplex::cis(&self.w(x));
        let i = BigComplex::from_i64(0, 1, self.wp);
        let c = &(&w - &i) / &(&w + &i);
        self.out_c(-&c.mul_i().ln())
    }

    // ---- characters ----

    /// `|exp(2it·log q) − 1|`, zero exactly when `x ↦ exp(2it log|x|)` is `q`-periodic.
    pub fn character_defect(&self, t: &BigFloat) -> BigFloat {
        let angle = (&self.w(t) * &self.ln_q).mul_pow2(1);
        let z = BigComplex::cis(&angle);
        let one = BigComplex::from_i64(1, 0, self.wp);
        self.out((&z - &one).abs())
    }

    // ---- transported group law ----

    /// `u⁻¹((u(x) + u(y)) mod u(1))` for an increasing bijection `u` of `[0, 1]` with `u(0) = 0`.
    pub fn transported_add<U, V>(&self, u: U, u_inv: V, x: &BigFloat, y: &BigFloat) -> Result<BigFloat, AnalyticError>
    where
        U: Fn(&BigFloat) -> BigFloat,
        V: Fn(&BigFloat) -> BigFloat,
    {
        let zero = BigFloat::zero(self.prec);
        let one = self.float(1);
        for v in [x, y] {
            if v < &zero || v > &one {
                return Err(domain("transported_add", "arguments must lie in [0, 1]"));
            }
        }
        let period = u(&one);
        let mut s = &u(x) + &u(y);
        if s >= period {
            s = &s - &period;
        }
        Ok(self.out(u_inv(&s)))
    }

    // ---- dihedral action ----

    /// Applies `word` right to left: `[r, s]` means `r(s(x))`.
    pub fn dihedral_act(&self, word: &[Dihedral], x: &BigFloat) -> Result<BigFloat, AnalyticError> {
        Self::require_nonzero("dihedral_act", x)?;
        let mut v = self.w(x);
        for g in word.iter().rev() {
            v = match g {
                Dihedral::R => v.recip(),
                Dihedral::S => &v * &self.q,
                Dihedral::SInv => &v / &self.q,
            };
        }
        Ok(self.out(v))
    }

    // ---- the two paths into PGL₂(ℂ) ----

    /// Upper path: the unit-determinant `J(τ(x))` pushed through the SL₂(ℝ) → SU(1,1)
    /// identification. Lower path: `diag(e^{iθ}, e^{−iθ})` with `θ = sawtooth(log x)`.
    ///
    /// At `τ(x) = ∞` the upper path uses the limit class `[[0, 1], [−1, 0]]`.
    pub fn claim_23_paths(&self, x: &BigFloat) -> Result<(CMat2, CMat2), AnalyticError> {
        if !x.is_positive() {
            return Err(domain("claim_23_paths", "requires x > 0"));
        }
        let p = self.tau(x)?;
        let theta = self.w(&p.theta);
        let wp = self.wp;
        let (j00, j01) = match self.affine_value(&p) {
            ExtReal::Finite(t) => {
                let t = self.w(&t);
                let one = BigFloat::from_i64(1, wp);
                let norm = (&one + &t.square()).sqrt().recip();
                (norm.clone(), &t * &norm)
            }
            _ => (BigFloat::zero(wp), BigFloat::from_i64(1, wp)),
        };
        // normalized J = [[a, b], [−b, a]]
        let normalized_j = [[j00.clone(), j01.clone()], [-&j01, j00]];
        let upper = su11_numeric(&normalized_j);
        let lower = CMat2::diag(BigComplex::cis(&theta), BigComplex::cis(&-&theta));
        Ok((self.out_m(upper), self.out_m(lower)))
    }

    fn out_m(&self, m: CMat2) -> CMat2 {
        CMat2::new(self.out_c(m.m00), self.out_c(m.m01), self.out_c(m.m10), self.out_c(m.m11))
    }
}

/// Numeric form of the SL₂(ℝ) → SU(1,1) identification on a real matrix.
pub fn su11_numeric(m: &[[BigFloat; 2]; 2]) -> CMat2 {
    let alpha = (&m[0][0] + &m[1][1]).mul_pow2(-1);
    let delta = (&m[1][1] - &m[0][0]).mul_pow2(-1);
    let gamma = (&m[0][1] + &m[1][0]).mul_pow2(-1);
    let beta = (&m[1][0] - &m[0][1]).mul_pow2(-1);
    CMat2::new(
        BigComplex::new(alpha.clone(), beta.clone()),
        BigComplex::new(gamma.clone(), delta.clone()),
        BigComplex::new(gamma, -&delta),
        BigComplex::new(alpha, -&beta),
    )
}

#[cfg(test)]
mod tests;
