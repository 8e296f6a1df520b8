use std::process::Command;

use projline::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("projline").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_add_examples() {
    assert_eq!(call(&["eval", "add", "1", "1"]), (0, "inf\n".into(), String::new()));
    assert_eq!(call(&["eval", "add", "3", "inf"]).1, "-1/3\n");
    assert_eq!(call(&["eval", "add", "1/2", "1/3"]).1, "1\n");
    assert_eq!(call(&["eval", "add", "-5", "5"]).1, "0\n");
}

#[test]
fn eval_output_reparses() {
    for (x, y) in [("2/7", "-3/5"), ("inf", "inf"), ("0.25", "4"), ("-1e3", "7")] {
        let (code, out, _) = call(&["eval", "add", x, y]);
        assert_eq!(code, 0);
        let printed = out.trim();
        let again = call(&["eval", "add", printed, "0"]).1;
        assert_eq!(again.trim(), printed);
    }
    let (code, out, _) = call(&["eval", "tau", "3"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let value = line.split_whitespace().nth(1).unwrap();
        let parsed = projline::scalars::BigFloat::parse(value, 192).unwrap();
        assert_eq!(parsed.to_string(), value);
    }
}

#[test]
fn bad_rational_is_usage_error() {
    let (code, out, err) = call(&["eval", "add", "1/0", "2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("`1/0`"), "{err}");
    assert_eq!(call(&["eval", "add", "abc", "2"]).0, 2);
}

#[test]
fn domain_errors_name_the_operation() {
    let (code, _, err) = call(&["eval", "tau", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("tau"), "{err}");
    let (code, _, err) = call(&["matrix", "h", "-i"]);
    assert_eq!(code, 2);
    assert!(err.contains("h_matrix"), "{err}");
    let (code, _, err) = call(&["matrix", "j", "inf"]);
    assert_eq!(code, 2);
    assert!(err.contains("j_matrix"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["verify", "--format", "csv"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "no-such-check"]).0, 2);
    assert_eq!(call(&["series", "nseries"]).0, 2);
    assert_eq!(call(&["eval", "tau", "1", "--prec", "8"]).0, 2);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("default: 192") || out.contains("[default: 192]"), "{out}");
}

#[test]
fn fgl_csv_table() {
    let (code, out, _) = call(&["fgl", "coeffs", "--order", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "degree_x,degree_y,numerator,denominator\n0,1,1,1\n1,0,1,1\n1,2,1,1\n2,1,1,1\n"
    );
}

#[test]
fn series_and_matrix() {
    let (code, out, _) = call(&["series", "tan", "--order", "7", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("\n7,17,315\n"), "{out}");
    let (code, out, _) = call(&["matrix", "c"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["determinant"], "2i");
    assert_eq!(v["trace"], "1+i");
    assert_eq!(v["projective_order"], 3);
    let (_, out, _) = call(&["matrix", "j", "2", "--power", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"][0], serde_json::json!(["-3", "4"]));
}

#[test]
fn sample_rows() {
    let (code, out, _) = call(&["sample", "tau", "--from", "1", "--to", "3", "--steps", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "x,theta,tan_theta,re_chi,im_chi");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("1.0"));
}

#[test]
fn verify_subset_and_output_file() {
    let dir = std::env::temp_dir().join(format!("projline-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) =
        call(&["verify", "--suite", "j-identity", "--trials", "50", "--seed", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["results"][0]["trials"], 50);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_projline");
    let ok = Command::new(bin).args(["eval", "add", "3", "inf"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "-1/3\n");
    let bad = Command::new(bin).args(["eval", "add", "x", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
