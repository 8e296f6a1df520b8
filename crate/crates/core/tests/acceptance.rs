//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;

use projline::analytic::Analytic;
use projline::mobius::{h_matrix, MobiusError};
use projline::scalars::{BigFloat, GaussRational, Rational};
use projline::series::{arctan_series, fgl_from_log, fgl_rational, log_of_fgl, log_sum, tan_series, TruncSeries};
use projline::verify::{run_suite, CheckResult, SuiteConfig};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(names: &[&str], trials: Option<u64>) -> Vec<CheckResult> {
    let config = SuiteConfig { seed: 42, trials, ..SuiteConfig::default() };
    let sel: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    run_suite(&config, &sel).expect("known checks")
}

fn summary(r: &CheckResult) -> String {
    let mut s = format!("{}: {} trials, {} failures", r.name, r.trials, r.failures);
    if let Some(e) = &r.max_error {
        s.push_str(&format!(", max error {e}"));
    }
    s
}

fn max_error_below(r: &CheckResult, bits: i32) -> bool {
    let e = BigFloat::parse(r.max_error.as_deref().unwrap_or("0"), 64).unwrap();
    e.is_zero() || e < BigFloat::from_i64(1, 64).mul_pow2(-(bits as i64))
}

fn numeric(names: &[&str], trials: u64) -> Outcome {
    let rs = suite(names, Some(trials));
    Outcome {
        pass: rs.iter().all(|r| r.passed() && r.trials >= trials && max_error_below(r, 160)),
        detail: rs.iter().map(summary).collect::<Vec<_>>().join("; "),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.pass &= took < limit;
    o.detail.push_str(&format!(" ({:.2} s, limit {} s)", took.as_secs_f64(), limit.as_secs()));
    o
}

fn c1() -> Outcome {
    timed(Duration::from_secs(5), || {
        let r = &suite(&["group-axioms-exact"], Some(10_000))[0];
        Outcome { pass: r.passed() && r.trials == 10_000, detail: summary(r) }
    })
}

fn c2() -> Outcome {
    timed(Duration::from_secs(10), || {
        let f = fgl_rational(24);
        let equal = fgl_from_log(24) == f;
        let log = log_of_fgl(&f).map(|l| l == log_sum(24)).unwrap_or(false);
        Outcome {
            pass: equal && log,
            detail: format!("from-log = rational to degree 24: {equal}; arctan F = arctan x + arctan y: {log}"),
        }
    })
}

/// `[xⁿ] tan = (1/n)·[wⁿ⁻¹] (w / arctan w)ⁿ`.
fn tan_by_lagrange(order: usize) -> Vec<Rational> {
    let a = arctan_series(order + 1);
    let shifted = TruncSeries::from_coeffs(order, a.coeffs()[1..].to_vec());
    let ratio = shifted.recip().expect("unit constant term");
    let mut power = TruncSeries::one(order);
    let mut out = vec![Rational::zero()];
    for n in 1..=order {
        power = power.mul(&ratio).unwrap();
        out.push(power.coeff(n - 1) / Rational::from_integer((n as i64).into()));
    }
    out
}

fn c3() -> Outcome {
    let round_trip = arctan_series(24).compose(&tan_series(24)) == Ok(TruncSeries::x(24));
    let known = TruncSeries::from_coeffs(
        7,
        [(0, 1), (1, 1), (0, 1), (1, 3), (0, 1), (2, 15), (0, 1), (17, 315)]
            .iter()
            .map(|&(n, d)| Rational::new(n.into(), d.into()))
            .collect(),
    );
    let first = tan_series(7) == known;
    let lagrange = tan_series(24).coeffs() == tan_by_lagrange(24).as_slice();
    Outcome {
        pass: round_trip && first && lagrange,
        detail: format!(
            "arctan ∘ tan = x at 24: {round_trip}; x + x³/3 + 2x⁵/15 + 17x⁷/315: {first}; Lagrange oracle to 24: {lagrange}"
        ),
    }
}

fn c4() -> Outcome {
    let r = &suite(&["j-identity"], Some(1_000))[0];
    Outcome { pass: r.passed() && r.trials == 1_000, detail: summary(r) }
}

fn c5() -> Outcome {
    let r = &suite(&["h-identity"], Some(1_000))[0];
    let i = GaussRational::i();
    let rejected = [i.clone(), -&i].iter().all(|x| matches!(h_matrix(x), Err(MobiusError::SingularFamily(_))));
    Outcome {
        pass: r.passed() && r.trials == 1_000 && rejected,
        detail: format!("{}; H(±i) rejected: {rejected}", summary(r)),
    }
}

fn c6() -> Outcome {
    numeric(&["tau-homomorphism", "cayley-multiplicativity", "tau-q-periodicity"], 1_000)
}

fn c7() -> Outcome {
    numeric(&["chi-commutes"], 1_000)
}

fn c8() -> Outcome {
    let r = &suite(&["cayley-matrix-facts"], Some(1_000))[0];
    let flag = r.paper_flag.clone().unwrap_or_default();
    Outcome {
        pass: r.passed() && r.trials >= 1_000 && flag.contains("projective order"),
        detail: format!("{}; flag: {flag}", summary(r)),
    }
}

fn c9() -> Outcome {
    let r = &suite(&["character-lattice"], None)[0];
    let a = Analytic::new(192);
    let four_ulp = a.unit_ulp().mul_pow2(2);
    let gap = BigFloat::parse("0.1", 192).unwrap();
    let mut ok = true;
    for k in -40i64..=40 {
        let d = a.character_defect(&BigFloat::parse(&format!("{k}/4"), 192).unwrap());
        ok &= if k % 4 == 0 { d < four_ulp } else { d > gap };
    }
    let flagged = r.paper_flag.as_deref().is_some_and(|f| f.contains("πℤ"));
    Outcome { pass: r.passed() && ok && flagged, detail: format!("{}; scan ok: {ok}; flagged: {flagged}", summary(r)) }
}

fn c10() -> Outcome {
    numeric(&["mercator"], 1_000)
}

fn c11() -> Outcome {
    numeric(&["claim-23-spectra"], 100)
}

fn c12() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_projline");
    let start = Instant::now();
    let status = Command::new(bin).args(["verify", "--suite", "all", "--seed", "42"]).output();
    let took = start.elapsed();
    let verify_ok = status.as_ref().map(|o| o.status.code() == Some(0)).unwrap_or(false);
    let csv = || Command::new(bin).args(["fgl", "coeffs", "--order", "16", "--format", "csv"]).output().map(|o| o.stdout);
    let (a, b) = (csv(), csv());
    let identical = matches!((&a, &b), (Ok(x), Ok(y)) if x == y && !x.is_empty());
    Outcome {
        pass: verify_ok && took < Duration::from_secs(60) && identical,
        detail: format!(
            "verify --suite all --seed 42 exit 0: {verify_ok} in {:.2} s (limit 60 s); fgl csv byte-identical: {identical}",
            took.as_secs_f64()
        ),
    }
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("exact group axioms on P1(Q)", c1),
        ("FGL coefficient equality and logarithm", c2),
        ("series reversion round trip", c3),
        ("J-identity", c4),
        ("H-identity over Q(i)", c5),
        ("covering map and Cayley identities", c6),
        ("character equals -Cayley after tau", c7),
        ("Cayley matrix facts", c8),
        ("character lattice", c9),
        ("Mercator identity", c10),
        ("two-path spectra", c11),
        ("CLI verify and golden CSV", c12),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}: {title}: {}", k + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
