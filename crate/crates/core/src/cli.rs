//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage or
//! domain errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analytic::{sample_tau, samples_csv, Analytic};
use crate::mobius::{cayley_bold, cayley_c, h_matrix, j_matrix, proj_order, Mat2};
use crate::proj_line::{pp_add, QPoint};
use crate::scalars::{BigFloat, GaussRational, Scalar};
use crate::series::{
    arctan_series, bivariate_csv, bivariate_json, fgl_from_log, fgl_rational, n_series, tan_series, univariate_csv,
    univariate_json, TruncSeries,
};
use crate::verify::{run_report, SuiteConfig};

/// Projective matrices up to this power are searched for a scalar multiple.
const ORDER_BOUND: u32 = 24;

#[derive(Debug, Parser)]
#[command(name = "projline", version, about = "Exact and high-precision arithmetic on the projective line")]
pub struct Cli {
    /// Working precision in bits for numeric evaluation
    #[arg(long, global = true, default_value_t = 192, value_parser = clap::value_parser!(u32).range(64..=1_000_000))]
    pub prec: u32,
    /// Truncation order for power series
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..=400))]
    pub order: u32,
    /// Seed for the verification suite
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single operation
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Formal group law tables
    #[command(subcommand)]
    Fgl(FglCmd),
    /// Univariate series coefficients: arctan, tan, or `nseries <k>`
    Series {
        #[arg(value_parser = ["arctan", "tan", "nseries"])]
        kind: String,
        /// Multiplier for `nseries`
        #[arg(allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Matrix facts: `c`, `cbold`, `j <x>` or `h <X>`
    Matrix {
        #[arg(value_parser = ["c", "cbold", "j", "h"])]
        name: String,
        /// Argument of `j` (rational) or `h` (Gaussian rational)
        #[arg(allow_hyphen_values = true)]
        arg: Option<String>,
        /// Raise the matrix to this power first
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Sampling tables
    #[command(subcommand)]
    Sample(SampleCmd),
    /// Run the verification suite and print its JSON report
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum EvalCmd {
    /// x +_P y on rationals or `inf`
    Add {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// tan log|x| as an angle in (−π/2, π/2] and an affine value
    Tau {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FglCmd {
    /// Coefficients of (x + y)/(1 − xy), cross-checked against tan(arctan x + arctan y)
    Coeffs,
}

#[derive(Debug, Subcommand)]
pub enum SampleCmd {
    /// Rows x, θ, tan θ, Re χ, Im χ on an even grid
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = 10)]
        steps: u32,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all` or a check name (repeatable)
    #[arg(long, default_value = "all")]
    pub suite: Vec<String>,
    /// Trials per check (default: each check's own count)
    #[arg(long)]
    pub trials: Option<u64>,
    /// Height bound for random rationals
    #[arg(long, default_value_t = 1_000_000)]
    pub height: u64,
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_point(tok: &str) -> Result<QPoint, Failure> {
    tok.parse().map_err(|_| Failure::Usage(format!("cannot parse `{tok}` as a rational or inf")))
}

fn parse_float(tok: &str, prec: u32) -> Result<BigFloat, Failure> {
    BigFloat::parse(tok, prec).map_err(|_| Failure::Usage(format!("cannot parse `{tok}` as a number")))
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let (text, failure) = match execute(&cli) {
        Ok(text) => (text, None),
        Err(Failure::Check(text)) => (text, Some(Failure::Check(String::new()))),
        Err(f) => (String::new(), Some(f)),
    };
    if !text.is_empty() {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    }
    match failure {
        None => 0,
        Some(Failure::Check(_)) => {
            let _ = writeln!(err, "verification failed");
            1
        }
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let order = cli.order as usize;
    match &cli.command {
        Command::Eval(EvalCmd::Add { x, y }) => {
            let s = pp_add(&parse_point(x)?, &parse_point(y)?);
            Ok(format!("{s}\n"))
        }
        Command::Eval(EvalCmd::Tau { x }) => {
            let a = Analytic::new(cli.prec);
            let p = a.tau(&parse_float(x, cli.prec)?).map_err(usage)?;
            Ok(format!("theta {}\ntan {}\n", p.theta(), a.affine_value(&p)))
        }
        Command::Fgl(FglCmd::Coeffs) => {
            let f = fgl_rational(order);
            if fgl_from_log(order) != f {
                return Err(Failure::Check("tan(arctan x + arctan y) differs from (x + y)/(1 − xy)".into()));
            }
            Ok(match cli.format {
                Format::Csv => bivariate_csv(&f),
                Format::Json => bivariate_json(&f) + "\n",
            })
        }
        Command::Series { kind, k } => {
            let s = match (kind.as_str(), k) {
                ("arctan", None) => arctan_series(order),
                ("tan", None) => tan_series(order),
                ("nseries", Some(k)) => n_series(*k, order),
                ("nseries", None) => return Err(usage("`series nseries` needs an integer argument")),
                (other, Some(_)) => return Err(usage(format!("`series {other}` takes no argument"))),
                _ => unreachable!("restricted by the value parser"),
            };
            Ok(series_text(&s, cli.format))
        }
        Command::Matrix { name, arg, power } => matrix(name, arg.as_deref(), *power, cli.format),
        Command::Sample(SampleCmd::Tau { from, to, steps }) => {
            let a = Analytic::new(cli.prec);
            let (lo, hi) = (parse_float(from, cli.prec)?, parse_float(to, cli.prec)?);
            let rows = sample_tau(&a, &lo, &hi, *steps).map_err(usage)?;
            Ok(match cli.format {
                Format::Csv => samples_csv(&rows),
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|r| SampleJson {
                            x: r.x.to_string(),
                            theta: r.theta.to_string(),
                            tan_theta: r.tan_theta.to_string(),
                            re_chi: r.chi.re.to_string(),
                            im_chi: r.chi.im.to_string(),
                        })
                        .collect();
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
            })
        }
        Command::Verify(v) => {
            if cli.format == Format::Csv {
                return Err(usage("verify only produces JSON"));
            }
            let config = SuiteConfig { seed: cli.seed, trials: v.trials, precision: cli.prec, order, height: v.height };
            let report = run_report(&config, &v.suite).map_err(usage)?;
            let text = report.to_json() + "\n";
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Check(text))
            }
        }
    }
}

#[derive(Serialize)]
struct SampleJson {
    x: String,
    theta: String,
    tan_theta: String,
    re_chi: String,
    im_chi: String,
}

fn series_text(s: &TruncSeries, format: Format) -> String {
    match format {
        Format::Csv => univariate_csv(s),
        Format::Json => univariate_json(s) + "\n",
    }
}

#[derive(Serialize)]
struct MatrixJson {
    name: String,
    power: u32,
    entries: [[String; 2]; 2],
    determinant: String,
    trace: String,
    projective_order: Option<u32>,
    order_bound: u32,
}

fn describe<S: Scalar>(name: String, m: &Mat2<S>, power: u32, format: Format) -> Result<String, Failure> {
    let p = m.pow(power);
    let order = proj_order(&p, ORDER_BOUND).map_err(usage)?;
    let info = MatrixJson {
        name,
        power,
        entries: [[p.m00.to_string(), p.m01.to_string()], [p.m10.to_string(), p.m11.to_string()]],
        determinant: p.det().to_string(),
        trace: p.trace().to_string(),
        projective_order: order,
        order_bound: ORDER_BOUND,
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&info).expect("serializable") + "\n",
        Format::Csv => {
            let order = info.projective_order.map_or_else(String::new, |k| k.to_string());
            format!(
                "field,value\nname,{}\npower,{}\nm00,{}\nm01,{}\nm10,{}\nm11,{}\ndeterminant,{}\ntrace,{}\nprojective_order,{order}\norder_bound,{}\n",
                info.name,
                info.power,
                info.entries[0][0],
                info.entries[0][1],
                info.entries[1][0],
                info.entries[1][1],
                info.determinant,
                info.trace,
                info.order_bound
            )
        }
    })
}

fn matrix(name: &str, arg: Option<&str>, power: u32, format: Format) -> Result<String, Failure> {
    match (name, arg) {
        ("c", None) => describe("c".into(), &cayley_c(), power, format),
        ("cbold", None) => describe("cbold".into(), &cayley_bold(), power, format),
        ("j", Some(x)) => {
            let m = j_matrix(&parse_point(x)?).map_err(|e| usage(format!("j_matrix: {e}")))?;
            describe(format!("j({x})"), &m, power, format)
        }
        ("h", Some(x)) => {
            let z: GaussRational =
                x.parse().map_err(|_| Failure::Usage(format!("cannot parse `{x}` as a Gaussian rational")))?;
            let m = h_matrix(&z).map_err(|e| usage(format!("h_matrix: {e}")))?;
            describe(format!("h({x})"), &m, power, format)
        }
        ("j" | "h", None) => Err(usage(format!("`matrix {name}` needs an argument"))),
        (other, Some(_)) => Err(usage(format!("`matrix {other}` takes no argument"))),
        _ => unreachable!("restricted by the value parser"),
    }
}
