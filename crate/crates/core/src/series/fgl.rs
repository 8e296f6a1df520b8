//! The formal group law of the projective line at the origin.
//!
//! Two independent constructions of `F(x, y)` are provided: through the logarithm,
//! `tan(arctan x + arctan y)`, and by expanding `(x + y)/(1 − xy)` geometrically.

use num_traits::One;

use super::{arctan_series, tan_series, BiSeries, SeriesError, TriSeries, TruncSeries};
use crate::scalars::Rational;

/// `tan(arctan x + arctan y)` through total degree `order`.
pub fn fgl_from_log(order: usize) -> BiSeries {
    let log_sum = log_sum(order);
    log_sum.substitute_into(&tan_series(order)).expect("log sum has zero constant term")
}

/// `arctan x + arctan y`.
pub fn log_sum(order: usize) -> BiSeries {
    let a = arctan_series(order);
    BiSeries::from_univariate(&a, 0)
        .add(&BiSeries::from_univariate(&a, 1))
        .expect("equal orders")
}

/// `(x + y)·Σ_{k≥0} (xy)^k` through total degree `order`.
pub fn fgl_rational(order: usize) -> BiSeries {
    let x = BiSeries::var(order, 0);
    let y = BiSeries::var(order, 1);
    let xy = x.mul(&y).expect("equal orders");
    let mut geometric = BiSeries::constant(order, Rational::one());
    let mut power = geometric.clone();
    for _ in 0..order / 2 {
        power = power.mul(&xy).expect("equal orders");
        geometric = geometric.add(&power).expect("equal orders");
    }
    x.add(&y).and_then(|s| s.mul(&geometric)).expect("equal orders")
}

/// `arctan(F(x, y))`, which equals [`log_sum`] when `arctan` is the logarithm of `F`.
pub fn log_of_fgl(f: &BiSeries) -> Result<BiSeries, SeriesError> {
    f.substitute_into(&arctan_series(f.order()))
}

/// `(F(F(x, y), z), F(x, F(y, z)))` as series in three variables.
pub fn associativity_sides(f: &BiSeries) -> Result<(TriSeries, TriSeries), SeriesError> {
    let n = f.order();
    let x = TriSeries::var(n, 0);
    let y = TriSeries::var(n, 1);
    let z = TriSeries::var(n, 2);
    let fxy = f.substitute(&[x.clone(), y.clone()])?;
    let fyz = f.substitute(&[y, z.clone()])?;
    Ok((f.substitute(&[fxy, z])?, f.substitute(&[x, fyz])?))
}

/// `F([n](x), [m](x))`, the formal sum of two n-series.
pub fn formal_sum(f: &BiSeries, a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    f.substitute_univariate(&[a.clone(), b.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;
    use crate::series::n_series;

    #[test]
    fn rational_expansion_pattern() {
        let f = fgl_rational(9);
        for a in 0..=9u32 {
            for b in 0..=(9 - a) {
                let want = if a.abs_diff(b) == 1 { int(1) } else { int(0) };
                assert_eq!(f.coeff([a, b]), want, "x^{a} y^{b}");
            }
        }
        assert_eq!(f.coeff([3, 2]), int(1));
        assert_eq!(f.coeff([1, 1]), int(0));
    }

    #[test]
    fn log_construction_small_order() {
        let f = fgl_from_log(6);
        assert_eq!(f.coeff([1, 0]), int(1));
        assert_eq!(f.coeff([0, 1]), int(1));
        assert_eq!(f.coeff([2, 1]), int(1));
        assert_eq!(f.coeff([2, 2]), int(0));
        assert_eq!(f, fgl_rational(6));
        // F(x, 0) = x
        let fx0 = f.substitute_univariate(&[TruncSeries::x(6), TruncSeries::zero(6)]).unwrap();
        assert_eq!(fx0, TruncSeries::x(6));
    }

    #[test]
    fn axioms_small_order() {
        let f = fgl_rational(7);
        assert_eq!(f.swap(), f);
        let (l, r) = associativity_sides(&f).unwrap();
        assert_eq!(l, r);
        assert_eq!(log_of_fgl(&f).unwrap(), log_sum(7));
        let sum = formal_sum(&f, &n_series(2, 7), &n_series(-3, 7)).unwrap();
        assert_eq!(sum, n_series(-1, 7));
    }
}
