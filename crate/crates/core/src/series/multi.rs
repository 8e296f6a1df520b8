use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{SeriesError, TruncSeries};
use crate::scalars::Rational;

/// Sparse power series in `K` variables over ℚ, truncated by total degree.
///
/// Only nonzero coefficients are stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiSeries<const K: usize> {
    order: usize,
    terms: BTreeMap<[u32; K], Rational>,
}

/// Series in two variables `x, y`.
pub type BiSeries = MultiSeries<2>;
/// Series in three variables `x, y, z`.
pub type TriSeries = MultiSeries<3>;

fn total(e: &[u32]) -> usize {
    e.iter().map(|&d| d as usize).sum()
}

impl<const K: usize> MultiSeries<K> {
    pub fn zero(order: usize) -> Self {
        Self { order, terms: BTreeMap::new() }
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.set([0; K], c);
        s
    }

    /// The `i`-th variable.
    pub fn var(order: usize, i: usize) -> Self {
        assert!(i < K);
        let mut e = [0; K];
        e[i] = 1;
        let mut s = Self::zero(order);
        s.set(e, Rational::one());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sets a coefficient; terms above the truncation order are dropped.
    pub fn set(&mut self, exps: [u32; K], c: Rational) {
        if total(&exps) > self.order || c.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, c);
        }
    }

    pub fn coeff(&self, exps: [u32; K]) -> Rational {
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; K], &Rational)> {
        self.terms.iter()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn has_zero_constant(&self) -> bool {
        !self.terms.contains_key(&[0; K])
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let v = out.coeff(*e) + c;
            out.set(*e, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        for (e, v) in &self.terms {
            out.set(*e, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut acc: BTreeMap<[u32; K], Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da = total(ea);
            for (eb, cb) in &other.terms {
                if da + total(eb) > self.order {
                    continue;
                }
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { order: self.order, terms: acc })
    }

    /// Powers `self^0 ..= self^max`.
    fn powers(&self, max: usize) -> Result<Vec<Self>, SeriesError> {
        let mut out = vec![Self::constant(self.order, Rational::one())];
        for k in 1..=max {
            let next = out[k - 1].mul(self)?;
            out.push(next);
        }
        Ok(out)
    }

    /// The univariate series `s` evaluated at `self`, which must have zero constant term.
    pub fn substitute_into(&self, s: &TruncSeries) -> Result<Self, SeriesError> {
        if s.order() != self.order {
            return Err(SeriesError::OrderMismatch(s.order(), self.order));
        }
        if !self.has_zero_constant() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = Self::zero(self.order);
        for c in s.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            let v = acc.coeff([0; K]) + c;
            acc.set([0; K], v);
        }
        Ok(acc)
    }

    /// Embeds a univariate series as a series in variable `i`.
    pub fn from_univariate(s: &TruncSeries, i: usize) -> Self {
        assert!(i < K);
        let mut out = Self::zero(s.order());
        for (d, c) in s.coeffs().iter().enumerate() {
            let mut e = [0; K];
            e[i] = d as u32;
            out.set(e, c.clone());
        }
        out
    }

    /// `F(g₀, …, g_{K−1})` where `F = self` and each `gᵢ` is a series in `M` variables
    /// with zero constant term.
    pub fn substitute<const M: usize>(&self, args: &[MultiSeries<M>; K]) -> Result<MultiSeries<M>, SeriesError> {
        for g in args {
            if g.order != self.order {
                return Err(SeriesError::OrderMismatch(self.order, g.order));
            }
            if !g.has_zero_constant() {
                return Err(SeriesError::NonzeroConstantTerm);
            }
        }
        let mut max_exp = [0usize; K];
        for e in self.terms.keys() {
            for (m, &d) in max_exp.iter_mut().zip(e) {
                *m = (*m).max(d as usize);
            }
        }
        let pows: Vec<Vec<MultiSeries<M>>> =
            args.iter().zip(max_exp).map(|(g, m)| g.powers(m)).collect::<Result<_, _>>()?;
        let mut acc = MultiSeries::<M>::zero(self.order);
        for (e, c) in &self.terms {
            let mut term = MultiSeries::<M>::constant(self.order, c.clone());
            for (i, &d) in e.iter().enumerate() {
                if d > 0 {
                    term = term.mul(&pows[i][d as usize])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes univariate series for every variable, giving a univariate series.
    pub fn substitute_univariate(&self, args: &[TruncSeries; K]) -> Result<TruncSeries, SeriesError> {
        let lifted: [MultiSeries<1>; K] = std::array::from_fn(|i| MultiSeries::<1>::from_univariate(&args[i], 0));
        let out = self.substitute(&lifted)?;
        Ok(TruncSeries::from_coeffs(self.order, (0..=self.order).map(|d| out.coeff([d as u32])).collect()))
    }
}

impl BiSeries {
    /// `F(y, x)`.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.order);
        for ([a, b], c) in &self.terms {
            out.set([*b, *a], c.clone());
        }
        out
    }
}
