use crate::scalars::{BigComplex, BigFloat};

/// 2×2 matrix with [`BigComplex`] entries.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat2 {
    pub m00: BigComplex,
    pub m01: BigComplex,
    pub m10: BigComplex,
    pub m11: BigComplex,
}

impl CMat2 {
    pub fn new(m00: BigComplex, m01: BigComplex, m10: BigComplex, m11: BigComplex) -> Self {
        Self { m00, m01, m10, m11 }
    }

    pub fn diag(a: BigComplex, d: BigComplex) -> Self {
        let prec = a.prec().max(d.prec());
        let z = BigComplex::from_i64(0, 0, prec);
        Self::new(a, z.clone(), z, d)
    }

    pub fn real(m00: BigFloat, m01: BigFloat, m10: BigFloat, m11: BigFloat) -> Self {
        Self::new(BigComplex::real(m00), BigComplex::real(m01), BigComplex::real(m10), BigComplex::real(m11))
    }

    pub fn trace(&self) -> BigComplex {
        &self.m00 + &self.m11
    }

    pub fn det(&self) -> BigComplex {
        &(&self.m00 * &self.m11) - &(&self.m01 * &self.m10)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &(&self.m00 * &o.m00) + &(&self.m01 * &o.m10),
            &(&self.m00 * &o.m01) + &(&self.m01 * &o.m11),
            &(&self.m10 * &o.m00) + &(&self.m11 * &o.m10),
            &(&self.m10 * &o.m01) + &(&self.m11 * &o.m11),
        )
    }

    /// Roots of `λ² − tλ + d`.
    pub fn eigenvalues(&self) -> [BigComplex; 2] {
        let t = self.trace();
        let d = self.det();
        let four_d = BigComplex::new(d.re.mul_pow2(2), d.im.mul_pow2(2));
        let disc = (&(&t * &t) - &four_d).sqrt();
        let half = |z: BigComplex| BigComplex::new(z.re.mul_pow2(-1), z.im.mul_pow2(-1));
        [half(&t + &disc), half(&t - &disc)]
    }

    /// Largest entrywise modulus of `self − o`.
    pub fn max_abs_diff(&self, o: &Self) -> BigFloat {
        [(&self.m00, &o.m00), (&self.m01, &o.m01), (&self.m10, &o.m10), (&self.m11, &o.m11)]
            .into_iter()
            .map(|(a, b)| (a - b).abs())
            .fold(BigFloat::zero(self.m00.prec()), |acc, v| if v > acc { v } else { acc })
    }
}

/// Distance between two-element multisets: the better of the two pairings, each
/// measured by its larger modulus.
pub fn spectra_distance(a: &[BigComplex; 2], b: &[BigComplex; 2]) -> BigFloat {
    let d = |x: &BigComplex, y: &BigComplex| (x - y).abs();
    let max = |p: BigFloat, q: BigFloat| if p > q { p } else { q };
    let straight = max(d(&a[0], &b[0]), d(&a[1], &b[1]));
    let crossed = max(d(&a[0], &b[1]), d(&a[1], &b[0]));
    if straight < crossed {
        straight
    } else {
        crossed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    #[test]
    fn eigenvalues_of_rotation() {
        let m = CMat2::real(
            BigFloat::from_i64(0, P),
            BigFloat::from_i64(1, P),
            BigFloat::from_i64(-1, P),
            BigFloat::from_i64(0, P),
        );
        let ev = m.eigenvalues();
        let want = [BigComplex::from_i64(0, -1, P), BigComplex::from_i64(0, 1, P)];
        assert!(spectra_distance(&ev, &want).leading_exp() < -120);
        assert_eq!(m.mul(&m).max_abs_diff(&CMat2::diag(BigComplex::from_i64(-1, 0, P), BigComplex::from_i64(-1, 0, P))), BigFloat::zero(P));
    }

    #[test]
    fn repeated_eigenvalue() {
        let one = BigComplex::from_i64(1, 1, P);
        let ev = CMat2::diag(one.clone(), one.clone()).eigenvalues();
        assert!(spectra_distance(&ev, &[one.clone(), one]).is_zero());
    }
}
