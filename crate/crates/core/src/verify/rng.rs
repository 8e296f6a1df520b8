//! Seeded sampling.
//!
//! Every check owns a ChaCha8 stream: the key is the suite seed (via
//! `SeedableRng::seed_from_u64`) and the stream id is the 64-bit FNV-1a hash of the
//! check name. Reports therefore do not depend on scheduling or on which other
//! checks were selected.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{BigFloat, GaussRational, Rational};

pub type CheckRng = ChaCha8Rng;

pub fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn check_rng(seed: u64, name: &str) -> CheckRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a64(name));
    rng
}

/// Uniform over reduced fractions `p/q` with `|p| ≤ height`, `1 ≤ q ≤ height`,
/// by rejection of pairs with a common factor.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, height: u64) -> Rational {
    assert!(height >= 1, "height must be at least 1");
    let h = height as i64;
    loop {
        let p = rng.gen_range(-h..=h);
        let q = rng.gen_range(1..=h);
        if p.gcd(&q) == 1 {
            return Rational::new_raw(BigInt::from(p), BigInt::from(q));
        }
    }
}

pub fn random_gauss<R: Rng + ?Sized>(rng: &mut R, height: u64) -> GaussRational {
    GaussRational::new(random_rational(rng, height), random_rational(rng, height))
}

/// Uniform on `[lo, hi)` with a full `prec`-bit random fraction.
pub fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: &BigFloat, hi: &BigFloat, prec: u32) -> BigFloat {
    let words = prec.div_ceil(64) as usize + 1;
    let digits: Vec<u64> = (0..words).map(|_| rng.gen()).collect();
    let mut bytes = Vec::with_capacity(words * 8);
    for w in &digits {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    let n = BigInt::from(BigUint::from_bytes_le(&bytes));
    let frac = BigFloat::from_bigint(&n, prec + 64).mul_pow2(-(64 * words as i64));
    (lo + &(&(hi - lo) * &frac)).with_prec(prec)
}
