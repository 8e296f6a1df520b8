//! Binary floating point with a per-value precision.
//!
//! A value is `(-1)^neg · mant · 2^exp` where a nonzero `mant` has exactly `prec`
//! significant bits. Addition, subtraction, multiplication, division and square root
//! are rounded to nearest, ties to even. Transcendental functions are evaluated with
//! [`GUARD_BITS`] extra bits and rounded once at the end.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::rational::Rational;

pub const DEFAULT_PREC: u32 = 192;
const GUARD_BITS: u32 = 64;

#[derive(Clone, Debug)]
pub struct BigFloat {
    neg: bool,
    mant: BigUint,
    exp: i64,
    prec: u32,
}

fn bits(m: &BigUint) -> i64 {
    m.bits() as i64
}

fn shl(m: &BigUint, k: i64) -> BigUint {
    debug_assert!(k >= 0);
    m << (k as usize)
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        Self { neg: false, mant: BigUint::zero(), exp: 0, prec }
    }

    /// Rounds `(-1)^neg · mant · 2^exp` to `prec` bits. `sticky` marks a nonzero
    /// remainder strictly below the last bit of `mant`.
    fn round_from(neg: bool, mant: BigUint, exp: i64, prec: u32, sticky: bool) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        if mant.is_zero() {
            debug_assert!(!sticky);
            return Self::zero(prec);
        }
        let (mut mant, mut exp) = if sticky {
            ((mant << 2usize) | BigUint::one(), exp - 2)
        } else {
            (mant, exp)
        };
        let nb = bits(&mant);
        let p = prec as i64;
        if nb > p {
            let shift = nb - p;
            let half = BigUint::one() << ((shift - 1) as usize);
            let low_mask = (BigUint::one() << (shift as usize)) - BigUint::one();
            let rem = &mant & &low_mask;
            mant >>= shift as usize;
            exp += shift;
            let up = match rem.cmp(&half) {
                Ordering::Greater => true,
                Ordering::Equal => mant.is_odd(),
                Ordering::Less => false,
            };
            if up {
                mant += 1u32;
                if bits(&mant) > p {
                    mant >>= 1usize;
                    exp += 1;
                }
            }
        } else if nb < p {
            mant = shl(&mant, p - nb);
            exp -= p - nb;
        }
        Self { neg, mant, exp, prec }
    }

    fn from_parts_int(v: &BigInt, exp: i64, prec: u32) -> Self {
        Self::round_from(v.sign() == Sign::Minus, v.magnitude().clone(), exp, prec, false)
    }

    fn exact_int(v: &BigInt) -> Self {
        Self::from_parts_int(v, 0, (v.bits() as u32).max(2))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_parts_int(&BigInt::from(v), 0, prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::from_parts_int(v, 0, prec)
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        assert!(v.is_finite(), "non-finite f64");
        if v == 0.0 {
            return Self::zero(prec);
        }
        let b = v.abs().to_bits();
        let (m, e) = if (b >> 52) == 0 {
            (b & ((1 << 52) - 1), -1074)
        } else {
            ((b & ((1 << 52) - 1)) | (1 << 52), ((b >> 52) as i64) - 1075)
        };
        Self::round_from(v < 0.0, BigUint::from(m), e, prec, false)
    }

    /// Correctly rounded `n/d`.
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Self::exact_int(r.numer()).div_prec(&Self::exact_int(r.denom()), prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Same value rounded to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::round_from(self.neg, self.mant.clone(), self.exp, prec, false)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.neg && !self.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.neg && !self.is_zero()
    }

    pub fn abs(&self) -> Self {
        Self { neg: false, ..self.clone() }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self { exp: self.exp + k, ..self.clone() }
    }

    /// Exponent of the leading bit: `2^e ≤ |x| < 2^(e+1)`. Zero gives `i64::MIN`.
    pub fn leading_exp(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + bits(&self.mant) - 1
        }
    }

    /// Unit in the last place of `|x|` at this precision; for zero, `2^(-prec)`.
    pub fn ulp(&self) -> Self {
        if self.is_zero() {
            return Self::from_i64(1, self.prec).mul_pow2(-(self.prec as i64));
        }
        Self::from_i64(1, self.prec).mul_pow2(self.exp)
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> Rational {
        let m = BigInt::from_biguint(if self.neg { Sign::Minus } else { Sign::Plus }, self.mant.clone());
        if self.exp >= 0 {
            Rational::from_integer(m << (self.exp as usize))
        } else {
            Rational::new(m, BigInt::one() << ((-self.exp) as usize))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let top = self.with_prec(53);
        let m = top.mant.to_f64().unwrap_or(f64::NAN);
        let v = m * 2f64.powi(top.exp.clamp(-2000, 2000) as i32);
        if self.neg {
            -v
        } else {
            v
        }
    }

    /// Largest integer `≤ x`.
    pub fn floor(&self) -> BigInt {
        let r = self.to_rational();
        r.floor().to_integer()
    }

    /// Smallest integer `≥ x`.
    pub fn ceil(&self) -> BigInt {
        let r = self.to_rational();
        r.ceil().to_integer()
    }

    fn signed_mant(&self) -> BigInt {
        BigInt::from_biguint(if self.neg { Sign::Minus } else { Sign::Plus }, self.mant.clone())
    }

    fn add_prec(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() {
            return other.with_prec(prec);
        }
        if other.is_zero() {
            return self.with_prec(prec);
        }
        let (big, small) = if self.leading_exp() >= other.leading_exp() { (self, other) } else { (other, self) };
        // below every bit of `big` and of the rounded result, `small` only decides the rounding direction
        let floor_exp = big.exp.min(big.leading_exp() - prec as i64) - 4;
        let small = if small.leading_exp() < floor_exp {
            Self { neg: small.neg, mant: BigUint::one(), exp: floor_exp - 1, prec: 2 }
        } else {
            small.clone()
        };
        let e = big.exp.min(small.exp);
        let a = big.signed_mant() << ((big.exp - e) as usize);
        let b = small.signed_mant() << ((small.exp - e) as usize);
        Self::from_parts_int(&(a + b), e, prec)
    }

    fn mul_prec(&self, other: &Self, prec: u32) -> Self {
        Self::round_from(self.neg != other.neg, &self.mant * &other.mant, self.exp + other.exp, prec, false)
    }

    fn div_prec(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero(prec);
        }
        let s = (prec as i64 + 3 + bits(&other.mant) - bits(&self.mant)).max(0);
        let (q, r) = shl(&self.mant, s).div_rem(&other.mant);
        Self::round_from(self.neg != other.neg, q, self.exp - other.exp - s, prec, !r.is_zero())
    }

    fn sqrt_prec(&self, prec: u32) -> Self {
        assert!(!self.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return Self::zero(prec);
        }
        let mut k = (2 * (prec as i64 + 3) - bits(&self.mant)).max(0);
        if (self.exp - k) % 2 != 0 {
            k += 1;
        }
        let m = shl(&self.mant, k);
        let root = m.sqrt();
        let exact = &root * &root == m;
        Self::round_from(false, root, (self.exp - k) / 2, prec, !exact)
    }

    pub fn sqrt(&self) -> Self {
        self.sqrt_prec(self.prec)
    }

    pub fn recip(&self) -> Self {
        Self::from_i64(1, self.prec).div_prec(self, self.prec)
    }

    pub fn square(&self) -> Self {
        self.mul_prec(self, self.prec)
    }

    fn max_prec(&self, other: &Self) -> u32 {
        self.prec.max(other.prec)
    }
}

// ---- constants ----

type ConstCache = Lazy<Mutex<HashMap<u32, BigFloat>>>;
static PI_CACHE: ConstCache = Lazy::new(|| Mutex::new(HashMap::new()));
static LN2_CACHE: ConstCache = Lazy::new(|| Mutex::new(HashMap::new()));

/// `Σ_k (-1)^k / ((2k+1)·n^(2k+1))` (or without the sign alternation) in fixed point with `f` fraction bits.
fn fixed_arctan_recip(n: u32, f: u32, alternating: bool) -> BigInt {
    let n2 = BigInt::from(n) * BigInt::from(n);
    let mut power = (BigInt::one() << (f as usize)) / BigInt::from(n);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if alternating && k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        power /= &n2;
        k += 1;
    }
    sum
}

fn cached(cache: &ConstCache, prec: u32, compute: impl FnOnce(u32) -> BigFloat) -> BigFloat {
    if let Some(v) = cache.lock().expect("constant cache poisoned").get(&prec) {
        return v.clone();
    }
    let v = compute(prec);
    cache.lock().expect("constant cache poisoned").insert(prec, v.clone());
    v
}

impl BigFloat {
    /// π rounded to `prec` bits (Machin's formula in fixed point).
    pub fn pi(prec: u32) -> Self {
        cached(&PI_CACHE, prec, |prec| {
            let f = prec + GUARD_BITS;
            let v = fixed_arctan_recip(5, f, true) * 16 - fixed_arctan_recip(239, f, true) * 4;
            Self::from_parts_int(&v, -(f as i64), prec)
        })
    }

    /// ln 2 rounded to `prec` bits, as `2·artanh(1/3)`.
    pub fn ln2(prec: u32) -> Self {
        cached(&LN2_CACHE, prec, |prec| {
            let f = prec + GUARD_BITS;
            let v = fixed_arctan_recip(3, f, false) * 2;
            Self::from_parts_int(&v, -(f as i64), prec)
        })
    }

    fn one_at(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    /// Sum of a power series whose terms shrink geometrically, until they fall below `2^-wp` relative to `scale`.
    fn series_sum(first: Self, wp: u32, mut next: impl FnMut(&Self, u64) -> Self) -> Self {
        let mut sum = first.clone();
        let mut term = first;
        let mut k = 1u64;
        loop {
            term = next(&term, k);
            if term.is_zero() || term.leading_exp() < sum.leading_exp() - wp as i64 - 2 {
                return sum;
            }
            sum = &sum + &term;
            k += 1;
        }
    }

    pub fn exp(&self) -> Self {
        let prec = self.prec;
        if self.is_zero() {
            return Self::one_at(prec);
        }
        let mag = self.leading_exp().max(0);
        assert!(mag < 48, "exp argument too large");
        let squarings: i64 = 12;
        let wp = prec + GUARD_BITS + squarings as u32 + mag as u32;
        let x = self.with_prec(wp);
        let ln2 = Self::ln2(wp + mag as u32 + 8);
        let n = (&x / &ln2).round_half_even();
        let nf = Self::from_bigint(&n, wp + mag as u32 + 8);
        let r = (&x.with_prec(wp + mag as u32 + 8) - &(&nf * &ln2)).with_prec(wp).mul_pow2(-squarings);
        let one = Self::one_at(wp);
        let mut y = Self::series_sum(one, wp, |t, k| (t * &r).div_prec(&Self::from_i64(k as i64, wp), wp));
        for _ in 0..squarings {
            y = y.square();
        }
        y.mul_pow2(n.to_i64().expect("exp scale fits i64")).with_prec(prec)
    }

    /// Natural logarithm. Panics for `x ≤ 0`.
    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "logarithm of a non-positive BigFloat");
        let prec = self.prec;
        let wp = prec + GUARD_BITS;
        // x = m·2^e with m ∈ [√½, √2)
        let mut e = self.leading_exp();
        let mut m = self.mul_pow2(-e).with_prec(wp);
        let sqrt2 = Self::from_i64(2, wp).sqrt();
        if m >= sqrt2 {
            m = m.mul_pow2(-1);
            e += 1;
        }
        let one = Self::one_at(wp);
        let t = &(&m - &one) / &(&m + &one);
        let lnm = t.atanh_series(wp).mul_pow2(1);
        let el = Self::from_i64(e, wp);
        let ln2 = Self::ln2(wp + 64);
        (&lnm + &(&el * &ln2)).with_prec(prec)
    }

    /// `Σ x^(2k+1)/(2k+1)` for small `|x|`.
    fn atanh_series(&self, wp: u32) -> Self {
        if self.is_zero() {
            return Self::zero(wp);
        }
        let x2 = self.square().with_prec(wp);
        let mut power = self.with_prec(wp);
        let mut sum = power.clone();
        let mut k = 1i64;
        loop {
            power = &power * &x2;
            let term = power.div_prec(&Self::from_i64(2 * k + 1, wp), wp);
            if term.is_zero() || term.leading_exp() < sum.leading_exp() - wp as i64 - 2 {
                return sum;
            }
            sum = &sum + &term;
            k += 1;
        }
    }

    /// `Σ (-1)^k x^(2k+1)/(2k+1)` for small `|x|`.
    fn atan_series(&self, wp: u32) -> Self {
        if self.is_zero() {
            return Self::zero(wp);
        }
        let x2 = -&self.square().with_prec(wp);
        let mut power = self.with_prec(wp);
        let mut sum = power.clone();
        let mut k = 1i64;
        loop {
            power = &power * &x2;
            let term = power.div_prec(&Self::from_i64(2 * k + 1, wp), wp);
            if term.is_zero() || term.leading_exp() < sum.leading_exp() - wp as i64 - 2 {
                return sum;
            }
            sum = &sum + &term;
            k += 1;
        }
    }

    /// Nearest integer, ties to even.
    pub fn round_half_even(&self) -> BigInt {
        Self::round_rational_half_even(&self.to_rational())
    }

    /// `(sin r, cos r)` by Taylor series for `|r| ≤ π/4`, at precision `wp`.
    fn sin_cos_reduced(r: &Self, wp: u32) -> (Self, Self) {
        let r2 = -&r.square().with_prec(wp);
        let sin = if r.is_zero() {
            Self::zero(wp)
        } else {
            Self::series_sum(r.with_prec(wp), wp, |t, k| {
                (t * &r2).div_prec(&Self::from_i64(((2 * k) * (2 * k + 1)) as i64, wp), wp)
            })
        };
        let cos = Self::series_sum(Self::one_at(wp), wp, |t, k| {
            (t * &r2).div_prec(&Self::from_i64(((2 * k - 1) * (2 * k)) as i64, wp), wp)
        });
        (sin, cos)
    }

    /// `(sin x, cos x)` at precision `wp`, with `x = k·π/2 + r`.
    fn sin_cos_wp(&self, wp: u32) -> (Self, Self) {
        if self.is_zero() {
            return (Self::zero(wp), Self::one_at(wp));
        }
        let mag = self.leading_exp().max(0);
        assert!(mag < 64, "trigonometric argument too large");
        let ext = wp + mag as u32 + GUARD_BITS;
        let half_pi = Self::pi(ext).mul_pow2(-1);
        let x = self.with_prec(ext);
        let k = (&x / &half_pi).round_half_even();
        let r = (&x - &(&Self::from_bigint(&k, ext) * &half_pi)).with_prec(wp);
        let (s, c) = Self::sin_cos_reduced(&r, wp);
        match k.mod_floor(&BigInt::from(4)).to_u32().expect("quadrant") {
            0 => (s, c),
            1 => (c, -&s),
            2 => (-&s, -&c),
            _ => (-&c, s),
        }
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.sin_cos_wp(self.prec + GUARD_BITS);
        (s.with_prec(self.prec), c.with_prec(self.prec))
    }

    pub fn sin(&self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Self {
        self.sin_cos().1
    }

    /// Tangent. Panics if the cosine evaluates to exactly zero.
    pub fn tan(&self) -> Self {
        let (s, c) = self.sin_cos_wp(self.prec + GUARD_BITS);
        (&s / &c).with_prec(self.prec)
    }

    /// Principal arctangent in `(-π/2, π/2)`.
    pub fn atan(&self) -> Self {
        self.atan_wp(self.prec + GUARD_BITS).with_prec(self.prec)
    }

    fn atan_wp(&self, wp: u32) -> Self {
        if self.is_zero() {
            return Self::zero(wp);
        }
        let one = Self::one_at(wp);
        let x = self.with_prec(wp);
        if x.abs() > one {
            let half_pi = Self::pi(wp).mul_pow2(-1);
            let inner = x.recip().atan_wp(wp);
            return if x.is_negative() { &(-&half_pi) - &inner } else { &half_pi - &inner };
        }
        // atan x = 2·atan(x / (1 + √(1+x²))), applied three times
        let mut y = x;
        for _ in 0..3 {
            let d = &one + &(&one + &y.square()).sqrt();
            y = &y / &d;
        }
        y.atan_series(wp).mul_pow2(3)
    }

    /// Angle of the point `(x, y)` in `(-π, π]`. Panics at the origin.
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let prec = y.max_prec(x);
        let wp = prec + GUARD_BITS;
        assert!(!(x.is_zero() && y.is_zero()), "atan2 at the origin");
        let pi = Self::pi(wp);
        let out = if x.is_zero() {
            let h = pi.mul_pow2(-1);
            if y.is_negative() {
                -&h
            } else {
                h
            }
        } else {
            let base = y.with_prec(wp).div_prec(&x.with_prec(wp), wp).atan_wp(wp);
            if x.is_positive() {
                base
            } else if y.is_negative() {
                &base - &pi
            } else {
                &base + &pi
            }
        };
        out.with_prec(prec)
    }

    /// Inverse hyperbolic tangent. Panics for `|x| ≥ 1`.
    pub fn atanh(&self) -> Self {
        let prec = self.prec;
        let wp = prec + GUARD_BITS;
        let one = Self::one_at(wp);
        assert!(self.abs() < one, "artanh outside (-1, 1)");
        if self.abs() <= Self::one_at(wp).mul_pow2(-2) {
            return self.atanh_series(wp).with_prec(prec);
        }
        let x = self.with_prec(wp);
        let ratio = (&one + &x).div_prec(&(&one - &x), wp);
        ratio.ln().mul_pow2(-1).with_prec(prec)
    }

    // ---- text ----

    /// Number of significant decimal digits that guarantees a text round trip.
    pub fn round_trip_digits(prec: u32) -> usize {
        (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1
    }

    /// Scientific notation `d.ddd…e±k` with `digits` significant digits, rounded half-even from the exact value.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let r = self.to_rational().abs();
        let ten = BigInt::from(10);
        let mut k = ((self.leading_exp() as f64) * std::f64::consts::LOG10_2).floor() as i64;
        let d = digits as i64;
        let digits_int = loop {
            let shift = d - 1 - k;
            let scaled = if shift >= 0 {
                &r * Rational::from_integer(num_traits::pow(ten.clone(), shift as usize))
            } else {
                &r / Rational::from_integer(num_traits::pow(ten.clone(), (-shift) as usize))
            };
            let n = Self::round_rational_half_even(&scaled);
            let lo = num_traits::pow(ten.clone(), (d - 1) as usize);
            let hi = &lo * &ten;
            if n >= hi {
                k += 1;
            } else if n < lo {
                k -= 1;
            } else {
                break n;
            }
        };
        let s = digits_int.to_string();
        let sign = if self.neg { "-" } else { "" };
        if s.len() == 1 {
            format!("{sign}{s}e{k}")
        } else {
            format!("{sign}{}.{}e{k}", &s[..1], &s[1..])
        }
    }

    fn round_rational_half_even(r: &Rational) -> BigInt {
        let fl = r.floor();
        let diff = r - &fl;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let fl = fl.to_integer();
        match diff.cmp(&half) {
            Ordering::Less => fl,
            Ordering::Greater => fl + 1,
            Ordering::Equal if fl.is_even() => fl,
            Ordering::Equal => fl + 1,
        }
    }

    /// Parses anything [`super::parse_rational`] accepts and rounds it to `prec` bits.
    pub fn parse(s: &str, prec: u32) -> Result<Self, super::ScalarError> {
        Ok(Self::from_rational(&super::parse_rational(s)?, prec))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(Self::round_trip_digits(self.prec)))
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl BigFloat {
    fn cmp_value(&self, other: &Self) -> Ordering {
        let sa = if self.is_zero() { 0 } else if self.neg { -1 } else { 1 };
        let sb = if other.is_zero() { 0 } else if other.neg { -1 } else { 1 };
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        let mag = match self.leading_exp().cmp(&other.leading_exp()) {
            Ordering::Equal => {
                let e = self.exp.min(other.exp);
                shl(&self.mant, self.exp - e).cmp(&shl(&other.mant, other.exp - e))
            }
            o => o,
        };
        if sa < 0 {
            mag.reverse()
        } else {
            mag
        }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { neg: !self.neg && !self.is_zero(), ..self.clone() }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, o: &BigFloat) -> BigFloat {
        self.add_prec(o, self.max_prec(o))
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, o: &BigFloat) -> BigFloat {
        self.add_prec(&-o, self.max_prec(o))
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, o: &BigFloat) -> BigFloat {
        self.mul_prec(o, self.max_prec(o))
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, o: &BigFloat) -> BigFloat {
        self.div_prec(o, self.max_prec(o))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, o: BigFloat) -> BigFloat {
                (&self).$m(&o)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, o: &BigFloat) -> BigFloat {
                (&self).$m(o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    const P: u32 = 192;

    fn close(a: &BigFloat, b: &BigFloat, rel_bits: i64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || d.leading_exp() < b.leading_exp().max(a.leading_exp()) - rel_bits
    }

    #[test]
    fn basic_rounding_is_exact_when_representable() {
        let a = BigFloat::from_i64(3, P);
        let b = BigFloat::from_i64(5, P);
        assert_eq!(&a + &b, BigFloat::from_i64(8, P));
        assert_eq!(&a * &b, BigFloat::from_i64(15, P));
        assert_eq!((&a - &b).to_f64(), -2.0);
        assert_eq!(BigFloat::from_i64(9, P).sqrt(), a);
        assert_eq!((&BigFloat::from_i64(1, P) / &BigFloat::from_i64(4, P)).to_f64(), 0.25);
    }

    #[test]
    fn ties_to_even_at_small_precision() {
        // 9 = 1001b at 3 bits is a tie between 8 and 10: even mantissa 100b wins
        assert_eq!(BigFloat::from_i64(9, 3).to_f64(), 8.0);
        assert_eq!(BigFloat::from_i64(11, 3).to_f64(), 12.0);
        assert_eq!(BigFloat::from_i64(13, 3).to_f64(), 12.0);
        // sticky bit breaks the tie upward: 1/3 at 2 bits
        assert_eq!(BigFloat::from_rational(&rat(1, 3).unwrap(), 2).to_f64(), 0.375);
    }

    #[test]
    fn division_matches_rational_rounding() {
        // 1/3 at 53 bits must equal the f64 nearest value
        let x = BigFloat::from_rational(&rat(1, 3).unwrap(), 53);
        assert_eq!(x.to_f64(), 1.0 / 3.0);
        let y = BigFloat::from_rational(&rat(-22, 7).unwrap(), 53);
        assert_eq!(y.to_f64(), -22.0 / 7.0);
    }

    #[test]
    fn far_apart_addition_rounds_like_exact() {
        let big = BigFloat::from_i64(1, 10);
        let tiny = BigFloat::from_i64(1, 10).mul_pow2(-500);
        assert_eq!(&big + &tiny, big);
        assert_eq!((&big - &tiny).to_f64(), 1.0);
        let exact = (&big.with_prec(600) - &tiny.with_prec(600)).with_prec(10);
        assert_eq!(&big - &tiny, exact);
    }

    #[test]
    fn pi_and_ln2_digits() {
        let pi = BigFloat::pi(P).to_decimal_string(50);
        assert_eq!(pi, "3.1415926535897932384626433832795028841971693993751e0");
        let ln2 = BigFloat::ln2(P).to_decimal_string(40);
        assert_eq!(ln2, "6.931471805599453094172321214581765680755e-1");
    }

    #[test]
    fn exp_ln_reference_values() {
        let e = BigFloat::from_i64(1, P).exp();
        assert_eq!(e.to_decimal_string(40), "2.718281828459045235360287471352662497757e0");
        let q = BigFloat::pi(P).exp();
        assert_eq!(q.to_decimal_string(30), "2.31406926327792690057290863679e1");
        assert!(close(&e.ln(), &BigFloat::from_i64(1, P), 188));
        let ten = BigFloat::from_i64(10, P);
        assert_eq!(ten.ln().to_decimal_string(40), "2.302585092994045684017991454684364207601e0");
        assert_eq!(BigFloat::from_i64(1, P).ln(), BigFloat::zero(P));
    }

    #[test]
    fn trig_reference_values() {
        let one = BigFloat::from_i64(1, P);
        assert_eq!(one.tan().to_decimal_string(30), "1.55740772465490223050697480746e0");
        assert_eq!(one.sin().to_decimal_string(30), "8.41470984807896506652502321630e-1");
        assert_eq!(one.atan().mul_pow2(2), BigFloat::pi(P));
        let two = BigFloat::from_i64(2, P);
        assert_eq!(two.cos().to_decimal_string(30), "-4.16146836547142386997568229501e-1");
        let half = BigFloat::from_rational(&rat(1, 2).unwrap(), P);
        assert_eq!(half.atanh().to_decimal_string(30), "5.49306144334054845697622618461e-1");
        let m = BigFloat::from_i64(-3, P);
        assert_eq!(BigFloat::atan2(&m, &m).to_decimal_string(20), "-2.3561944901923449288e0");
    }

    #[test]
    fn decimal_round_trip() {
        for v in [1.0, -0.1, 1e-30, 12345.678, -30.5] {
            let x = BigFloat::from_f64(v, P).exp();
            let s = x.to_string();
            assert_eq!(BigFloat::parse(&s, P).unwrap(), x, "{s}");
        }
    }

    #[test]
    fn tan_of_arctan_is_identity() {
        for k in -20..=20 {
            let x = BigFloat::from_rational(&rat(k * 7 + 3, 13).unwrap(), P);
            assert!(close(&x.atan().tan(), &x, 160), "{x}");
        }
    }
}
