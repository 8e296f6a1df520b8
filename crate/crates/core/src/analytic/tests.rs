use super::*;
use crate::proj_line::{pp_add, QPoint};
use crate::series::arctan_series;
use crate::scalars::rat;

const P: u32 = 192;

fn ctx() -> Analytic {
    Analytic::new(P)
}

fn f(s: &str) -> BigFloat {
    BigFloat::parse(s, P + 64).unwrap()
}

fn assert_close(a: &BigFloat, b: &BigFloat, bits: i64) {
    let d = (a - b).abs();
    assert!(d.is_zero() || d.leading_exp() < -bits, "{a} vs {b} differ by {d}");
}

fn assert_close_c(a: &BigComplex, b: &BigComplex, bits: i64) {
    let d = (a - b).abs();
    assert!(d.is_zero() || d.leading_exp() < -bits, "{a} vs {b} differ by {d}");
}

const TAN_1: &str = "1.55740772465490223050697480745836017308725077238152003838395";
const PI_4: &str = "0.785398163397448309615660845819875721049292349843776455243736";
const HALF_LN_3: &str = "0.549306144334054845697622618461262852323745278911374725867347";
const E_PI: &str = "23.140692632779269005729086367948547380266106242600211993445";
const TWO_MINUS_PI: &str = "-1.14159265358979323846264338327950288419716939937510582097494";

#[test]
fn arctan_ext_examples() {
    let a = ctx();
    assert!(a.arctan_ext(&ExtReal::Finite(a.float(0))).is_zero());
    assert_eq!(a.arctan_ext(&ExtReal::PosInf), a.pi().mul_pow2(-1));
    assert_eq!(a.arctan_ext(&ExtReal::NegInf), -&a.pi().mul_pow2(-1));
    let q1 = a.arctan_ext(&ExtReal::Finite(a.float(1)));
    assert_close(&q1, &f(PI_4), 190);

    // arctan(1/2 +_P 1/2) = 2·arctan(1/2), the right side summed from the series
    let half = rat(1, 2).unwrap();
    let sum = pp_add(&QPoint::affine(half.clone()), &QPoint::affine(half.clone()));
    assert_eq!(sum.to_string(), "4/3");
    let mut acc = BigFloat::zero(P + 64);
    let mut pow = BigFloat::from_rational(&half, P + 64);
    let x2 = pow.square();
    let s = arctan_series(401);
    for d in (1..=401).step_by(2) {
        acc = &acc + &(&BigFloat::from_rational(&s.coeff(d), P + 64) * &pow);
        pow = &pow * &x2;
    }
    let lhs = a.arctan_ext(&ExtReal::Finite(BigFloat::from_rational(&sum.to_affine().unwrap(), P)));
    assert_close(&lhs, &acc.mul_pow2(1), 188);
}

#[test]
fn sawtooth_examples() {
    let a = ctx();
    assert_eq!(a.sawtooth(&f("0.3").with_prec(P)), f("0.3").with_prec(P));
    assert!(a.sawtooth(&a.pi()).abs().leading_exp() < -(P as i64 - 4));
    assert_close(&a.sawtooth(&a.float(2)), &f(TWO_MINUS_PI), 188);
    let hp = a.pi().mul_pow2(-1);
    assert_eq!(a.sawtooth(&hp), hp);
    let s = a.sawtooth(&-&hp);
    assert!(s > -&hp && s <= hp);
}

#[test]
fn sawtooth_far_from_origin() {
    let a = ctx();
    let big = a.float(1_000_003);
    let r = a.sawtooth(&big);
    let hp = a.pi().mul_pow2(-1);
    assert!(r > -&hp && r <= hp);
    // tan is π-periodic, so tan(sawtooth(t)) = tan(t) when both are evaluated accurately
    let direct = big.with_prec(P + 96).tan();
    assert_close(&r.with_prec(P + 96).tan(), &direct, 160);
}

#[test]
fn tau_examples() {
    let a = ctx();
    assert!(a.tau(&a.float(1)).unwrap().theta().is_zero());
    let pole = a.pi().mul_pow2(-1).with_prec(P + 64).exp().with_prec(P);
    let p = a.tau(&pole).unwrap();
    assert!(a.chordal_dist(&p, &a.infinity()).leading_exp() < -(P as i64 - 32));
    let e = a.float(1).with_prec(P + 64).exp().with_prec(P);
    match a.affine_value(&a.tau(&e).unwrap()) {
        ExtReal::Finite(t) => assert_close(&t, &f(TAN_1), 185),
        other => panic!("expected finite, got {other}"),
    }
    assert!(matches!(a.tau(&a.float(0)), Err(AnalyticError::Domain { op: "tau", .. })));
}

#[test]
fn decompose_examples() {
    let a = ctx();
    let d = a.decompose_mod_q(&a.float(1)).unwrap();
    assert_eq!((d.n, d.sign), (0, 1));
    assert_eq!(d.mantissa, a.float(1));

    let q = a.q();
    let x = -&(&(&q * &q) * &f("1.1").with_prec(P));
    let d = a.decompose_mod_q(&x).unwrap();
    assert_eq!((d.n, d.sign), (2, -1));
    assert_close(&d.mantissa, &f("1.1"), P as i64 - 8);
    let back = a.recompose(&d);
    assert_close(&(&back / &x), &a.float(1), P as i64 - 8);

    let sqrt_q = a.pi().with_prec(P + 64).mul_pow2(-1).exp().with_prec(P);
    let d = a.decompose_mod_q(&sqrt_q).unwrap();
    assert_eq!((d.n, d.sign), (1, 1));
    let lo = (-&a.pi().with_prec(P + 64).mul_pow2(-1)).exp();
    assert_close(&d.mantissa, &lo, P as i64 - 8);
    assert!(a.decompose_mod_q(&a.float(0)).is_err());
}

#[test]
fn decompose_shift_by_q() {
    let a = ctx();
    for s in ["0.01", "3", "-7.5", "123456.789", "1e-9"] {
        let x = f(s).with_prec(P);
        let d0 = a.decompose_mod_q(&x).unwrap();
        let d1 = a.decompose_mod_q(&(&x * &a.q())).unwrap();
        assert_eq!(d1.n, d0.n + 1, "{s}");
        assert_eq!(d1.sign, d0.sign);
        assert_close(&(&d1.mantissa / &d0.mantissa), &a.float(1), P as i64 - 8);
    }
}

#[test]
fn chi_examples() {
    let a = ctx();
    assert_eq!(a.chi(&a.float(1)).unwrap(), BigComplex::from_i64(1, 0, P));
    let x = a.pi().with_prec(P + 64).mul_pow2(-1).exp().with_prec(P);
    assert_close_c(&a.chi(&x).unwrap(), &BigComplex::from_i64(-1, 0, P), P as i64 - 4);
    let two = a.float(2);
    let c1 = a.chi(&two).unwrap();
    let c2 = a.chi(&(&two * &a.q())).unwrap();
    assert_close_c(&c1, &c2, 160);
    assert!(a.chi(&a.float(0)).is_err());
}

#[test]
fn cayley_examples() {
    let a = ctx();
    let fin = |v: i64| ExtReal::Finite(a.float(v));
    assert_eq!(a.cayley_value(&fin(0)), BigComplex::from_i64(-1, 0, P));
    assert_eq!(a.cayley_value(&ExtReal::PosInf), BigComplex::from_i64(1, 0, P));
    assert_eq!(a.cayley_value(&fin(1)), BigComplex::from_i64(0, -1, P));
    for x in [fin(0), fin(1), fin(-3), ExtReal::PosInf, ExtReal::NegInf] {
        assert_close_c(&a.cayley_value(&x), &a.cayley_value_via_arctan(&x), P as i64 - 4);
    }
}

#[test]
fn chordal_examples() {
    let a = ctx();
    let zero = a.point(&ExtReal::Finite(a.float(0)));
    let one = a.point(&ExtReal::Finite(a.float(1)));
    let minus_one = a.point(&ExtReal::Finite(a.float(-1)));
    assert!(a.chordal_dist(&one, &one).is_zero());
    assert_close(&a.chordal_dist(&zero, &a.infinity()), &a.float(2), P as i64 - 4);
    assert_close(&a.chordal_dist(&one, &minus_one), &a.float(2), P as i64 - 4);
}

#[test]
fn numeric_group_law() {
    let a = ctx();
    let one = a.point(&ExtReal::Finite(a.float(1)));
    assert!(a.chordal_dist(&a.pp_add(&one, &one), &a.infinity()).leading_exp() < -(P as i64 - 8));
    let three = a.point(&ExtReal::Finite(a.float(3)));
    let s = a.pp_add(&three, &a.infinity());
    let want = a.point(&ExtReal::Finite(BigFloat::parse("-1/3", P).unwrap()));
    assert!(a.chordal_dist(&s, &want).leading_exp() < -(P as i64 - 8));
    assert_eq!(a.ext_add(&a.float(1), &a.float(1)), ExtReal::PosInf);
}

#[test]
fn mercator_examples() {
    let a = ctx();
    assert!(a.mercator_lambda(&a.float(0)).unwrap().is_zero());
    let pi6 = a.pi().with_prec(P + 64) / BigFloat::from_i64(6, P + 64);
    assert_close(&a.mercator_lambda(&pi6).unwrap(), &f(HALF_LN_3), P as i64 - 32);
    let x = f("0.3").with_prec(P);
    assert_eq!(a.mercator_lambda(&-&x).unwrap(), -&a.mercator_lambda(&x).unwrap());
    assert_close(&a.mercator_lambda(&x).unwrap(), &f("0.304603974401704103793067467766915779175631951021177421053016"), 185);
    let via = a.mercator_via_cayley(&x);
    assert_close(&via.re, &a.mercator_lambda(&x).unwrap(), P as i64 - 32);
    assert!(via.im.abs().leading_exp() < -(P as i64 - 32));
    assert!(a.mercator_lambda(&a.pi().mul_pow2(-1)).is_err());
}

#[test]
fn character_defect_examples() {
    let a = ctx();
    let four_ulp = a.unit_ulp().mul_pow2(2);
    assert!(a.character_defect(&a.float(0)).is_zero());
    assert!(a.character_defect(&a.float(1)) < four_ulp);
    assert_close(&a.character_defect(&BigFloat::parse("1/2", P).unwrap()), &a.float(2), P as i64 - 4);
    for k in -40..=40i64 {
        let t = BigFloat::parse(&format!("{k}/4"), P).unwrap();
        let d = a.character_defect(&t);
        if k % 4 == 0 {
            assert!(d < four_ulp, "t = {k}/4: {d}");
        } else {
            assert!(d > BigFloat::parse("0.1", P).unwrap(), "t = {k}/4");
        }
    }
}

#[test]
fn transported_examples() {
    let a = ctx();
    let id = |x: &BigFloat| x.clone();
    let x = |s: &str| f(s).with_prec(P);
    assert_eq!(a.transported_add(id, id, &x("0.25"), &x("0.5")).unwrap(), x("0.75"));
    assert_eq!(a.transported_add(id, id, &x("0.75"), &x("0.75")).unwrap(), x("0.5"));
    let sq = |v: &BigFloat| v.square();
    let root = |v: &BigFloat| if v.is_zero() { v.clone() } else { v.sqrt() };
    let r = a.transported_add(sq, root, &x("0.6"), &x("0.8")).unwrap();
    let one = a.float(1);
    // 0.36 + 0.64 rounds to 1 or just below it; either way the circle distance to 0 is tiny
    let circ = if r > x("0.5") { &one - &r } else { r.clone() };
    assert!(circ.is_zero() || circ.leading_exp() < -(P as i64 / 2 - 8), "{r}");
    assert!(a.transported_add(id, id, &x("1.5"), &x("0")).is_err());
}

#[test]
fn dihedral_examples() {
    use Dihedral::*;
    let a = ctx();
    let two = a.float(2);
    let rsr = a.dihedral_act(&[R, S, R], &two).unwrap();
    let si = a.dihedral_act(&[SInv], &two).unwrap();
    assert_close(&(&rsr / &si), &a.float(1), P as i64 - 4);
    assert_eq!(a.dihedral_act(&[R, R], &two).unwrap(), two);
    assert_close(&a.dihedral_act(&[S], &a.float(1)).unwrap(), &f(E_PI), 186);
    assert_eq!("s^-1".parse::<Dihedral>().unwrap(), SInv);
    assert!("t".parse::<Dihedral>().is_err());
}

#[test]
fn two_paths() {
    let a = ctx();
    let tol = a.tolerance();
    let (up, low) = a.claim_23_paths(&a.float(1)).unwrap();
    let id = CMat2::diag(BigComplex::from_i64(1, 0, P), BigComplex::from_i64(1, 0, P));
    assert!(up.max_abs_diff(&id) < tol && low.max_abs_diff(&id) < tol);

    let x = f(PI_4).exp().with_prec(P);
    let (up, low) = a.claim_23_paths(&x).unwrap();
    let quarter = f(PI_4).with_prec(P);
    let want = [BigComplex::cis(&quarter), BigComplex::cis(&-&quarter)];
    assert!(spectra_distance(&up.eigenvalues(), &want) < tol);
    assert!(spectra_distance(&low.eigenvalues(), &want) < tol);

    let e = a.float(1).with_prec(P + 64).exp().with_prec(P);
    let (up, low) = a.claim_23_paths(&e).unwrap();
    assert!(spectra_distance(&up.eigenvalues(), &low.eigenvalues()) < tol);

    let pole = f(PI_4).mul_pow2(1).exp().with_prec(P);
    let (up, low) = a.claim_23_paths(&pole).unwrap();
    assert!(spectra_distance(&up.eigenvalues(), &low.eigenvalues()) < tol);
    assert!(a.claim_23_paths(&a.float(-1)).is_err());
}

#[test]
fn sampling_rows() {
    let a = ctx();
    let rows = sample_tau(&a, &a.float(1), &a.float(3), 4).unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[2].x, a.float(2));
    let csv = samples_csv(&rows);
    assert!(csv.starts_with("x,theta,tan_theta,re_chi,im_chi\n"));
    assert_eq!(csv.lines().count(), 6);
    assert!(sample_tau(&a, &a.float(-1), &a.float(1), 2).is_err());
}
