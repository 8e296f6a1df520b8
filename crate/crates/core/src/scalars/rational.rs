use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ScalarError;

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `n/d` in canonical form.
pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational, ScalarError> {
    let d = d.into();
    if d.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(BigRational::new(n.into(), d))
}

/// Integer as a rational.
pub fn int(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// Parses `p`, `p/q`, or a finite decimal such as `-1.25` or `3e-2`.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        return rat(n, d).map_err(|_| bad());
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = t[i + 1..].parse().map_err(|_| bad())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (neg, body) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{ip}{fp}").parse().unwrap_or_else(|_| BigInt::zero());
    let scale = exp - fp.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return Err(bad());
    }
    let ten = BigInt::from(10u32);
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    let mut value = if scale >= 0 {
        BigRational::from_integer(digits * pow)
    } else {
        BigRational::new(digits, pow)
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

/// Greatest of `|numerator|` and `denominator`.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    if &n > r.denom() {
        n
    } else {
        r.denom().clone()
    }
}
