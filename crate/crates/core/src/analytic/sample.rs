use super::{Analytic, AnalyticError, ExtReal};
use crate::scalars::{BigComplex, BigFloat};

/// One sample of the covering map: `x`, `θ = sawtooth(log|x|)`, `tan θ` and `χ(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleRow {
    pub x: BigFloat,
    pub theta: BigFloat,
    pub tan_theta: ExtReal,
    pub chi: BigComplex,
}

/// `steps + 1` evenly spaced samples on `[from, to]`, endpoints included.
pub fn sample_tau(ctx: &Analytic, from: &BigFloat, to: &BigFloat, steps: u32) -> Result<Vec<SampleRow>, AnalyticError> {
    let p = ctx.prec();
    let width = to - from;
    (0..=steps)
        .map(|k| {
            let x = if steps == 0 {
                from.with_prec(p)
            } else {
                let frac = &BigFloat::from_i64(k as i64, p) / &BigFloat::from_i64(steps as i64, p);
                from + &(&width * &frac)
            };
            let point = ctx.tau(&x)?;
            Ok(SampleRow {
                tan_theta: ctx.affine_value(&point),
                theta: point.theta().clone(),
                chi: ctx.chi(&x)?,
                x,
            })
        })
        .collect()
}

/// CSV with header `x,theta,tan_theta,re_chi,im_chi`; numbers use round-trip decimal digits.
pub fn samples_csv(rows: &[SampleRow]) -> String {
    let mut out = String::from("x,theta,tan_theta,re_chi,im_chi\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{}\n", r.x, r.theta, r.tan_theta, r.chi.re, r.chi.im));
    }
    out
}
