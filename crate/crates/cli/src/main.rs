use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use factorial_transform::combinatorics::{bernoulli, stirling_first_signed, stirling_second};
use factorial_transform::exact::{fft_poly, ifft_poly, irft_poly, rft_poly};
use factorial_transform::numeric::{
    fft_fn, fractional_derivative, fractional_difference, ifft_fn, irft_fn, rft_fn, zeta_formal_series, Builtin,
    Estimate, NumericConfig, QuadratureSpec,
};
use factorial_transform::scalar::parse_rational;
use factorial_transform::special::{charlier, laguerre, touchard, z_poly};
use factorial_transform::verify::{format_table, run_all, Summary};
use factorial_transform::{Basis, BasisPolynomial, Rational};

#[derive(Parser)]
#[command(name = "ftx", version, about = "Falling and rising factorial transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-express a polynomial in another basis.
    Convert {
        #[arg(long, value_enum)]
        to: BasisArg,
        /// Inline polynomial JSON, a file path, or `-` for stdin (the default).
        input: Option<String>,
    },
    /// Apply a transform, exactly to a polynomial or numerically to a builtin source.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        /// Evaluate numerically on a builtin source instead of transforming a polynomial.
        #[arg(long, requires_all = ["at", "source"])]
        numeric: bool,
        /// Point at which the numeric transform is evaluated.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<f64>,
        /// Builtin source: exp(a), sin(w), cos(w), geometric(r) or gamma-samples.
        #[arg(long)]
        source: Option<String>,
        #[arg(long, default_value_t = NumericConfig::default().truncation)]
        truncation: usize,
        #[arg(long, default_value_t = QuadratureSpec::default().nodes)]
        nodes: usize,
        /// Polynomial input for the exact transform (inline JSON, path, or `-`).
        input: Option<String>,
    },
    /// Special polynomials and numbers.
    Special {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Laguerre parameter.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Charlier parameter.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Charlier argument.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Column of a Stirling triangle; the whole row is printed without it.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Fractional derivative or difference of a builtin source.
    Fractional {
        #[arg(long, value_enum)]
        kind: FractionalKind,
        #[arg(long, allow_hyphen_values = true)]
        order: f64,
        #[arg(long, allow_hyphen_values = true)]
        at: f64,
        #[arg(long)]
        source: String,
        #[arg(long, default_value_t = NumericConfig::default().truncation)]
        truncation: usize,
    },
    /// Partial sums of the Bernoulli rising-factorial series for ζ(s). No convergence is implied.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long)]
        terms: usize,
    },
    /// Run the identity verification suite.
    Verify {
        /// Glob over check names, e.g. `eq39*`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the reports as a JSON array to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Falling,
    Rising,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Monomial => Basis::Monomial,
            BasisArg::Falling => Basis::Falling,
            BasisArg::Rising => Basis::Rising,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Fft,
    Ifft,
    Rft,
    Irft,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Touchard,
    Z,
    Laguerre,
    Charlier,
    Stirling1,
    Stirling2,
    Bernoulli,
}

#[derive(Clone, Copy, ValueEnum)]
enum FractionalKind {
    Derivative,
    Difference,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(factorial_transform::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    /// Verification ran but some checks did not pass.
    #[error("{0}")]
    Verification(String),
}

impl From<factorial_transform::Error> for CliError {
    fn from(e: factorial_transform::Error) -> Self {
        match e {
            factorial_transform::Error::Parse(msg) => CliError::Usage(msg),
            factorial_transform::Error::UnknownCheck(name) => CliError::Usage(format!("unknown check `{name}`")),
            other => CliError::Math(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) | CliError::Io(_) | CliError::Verification(_) => 1,
        }
    }
}

fn read_input(input: Option<&str>) -> Result<String, CliError> {
    match input {
        Some(text) if text.trim_start().starts_with('{') => Ok(text.to_string()),
        None | Some("-") => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
        Some(path) => fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}"))),
    }
}

fn read_polynomial(input: Option<&str>) -> Result<BasisPolynomial, CliError> {
    let text = read_input(input)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid polynomial JSON: {e}")))
}

/// Writes to stdout. A reader that closed the pipe early is not an error.
fn emit(text: &str) {
    if let Err(e) = io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn print_json(value: &impl serde::Serialize) {
    emit(&(serde_json::to_string(value).expect("serializable output") + "\n"));
}

fn rational_arg(name: &str, value: Option<&str>) -> Result<Rational, CliError> {
    let text = value.ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))?;
    parse_rational(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn estimate_json(e: &Estimate) -> serde_json::Value {
    json!({ "value": e.value, "error": e.error, "terms": e.terms })
}

fn numeric_transform(op: Op, source: &str, at: f64, cfg: &NumericConfig, nodes: usize) -> Result<serde_json::Value, CliError> {
    let src = Builtin::parse(source)?;
    let estimate = match op {
        Op::Fft => fft_fn(&src.taylor()?, at, cfg)?,
        Op::Ifft => ifft_fn(&src.samples()?, at, cfg)?,
        Op::Irft => irft_fn(&src.callable(), at, cfg)?,
        Op::Rft => {
            let quad = QuadratureSpec { nodes, ..QuadratureSpec::default() };
            let value = rft_fn(&|t| src.eval(t), at, &quad)?;
            Estimate { value, error: quad.tolerance * value.abs().max(1.0), terms: nodes }
        }
    };
    Ok(estimate_json(&estimate))
}

fn special(family: Family, n: usize, alpha: Option<&str>, a: Option<&str>, x: Option<&str>, k: Option<usize>) -> Result<(), CliError> {
    let stirling = |entry: &dyn Fn(usize) -> String| match k {
        Some(k) => emit(&format!("{}\n", entry(k))),
        None => print_json(&(0..=n).map(entry).collect::<Vec<_>>()),
    };
    match family {
        Family::Touchard => print_json(&touchard(n)),
        Family::Z => print_json(&z_poly(n)),
        Family::Laguerre => {
            let alpha = match alpha {
                Some(_) => rational_arg("alpha", alpha)?,
                None => Rational::from_integer(0.into()),
            };
            print_json(&laguerre(n, &alpha));
        }
        Family::Charlier => {
            let x = rational_arg("x", x)?;
            let a = rational_arg("a", a)?;
            emit(&format!("{}\n", charlier(n, &x, &a)?));
        }
        Family::Stirling1 => stirling(&|k| stirling_first_signed(n, k).to_string()),
        Family::Stirling2 => stirling(&|k| stirling_second(n, k).to_string()),
        Family::Bernoulli => emit(&format!("{}\n", bernoulli(n))),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Convert { to, input } => {
            let p = read_polynomial(input.as_deref())?;
            print_json(&p.convert(to.into()));
        }
        Command::Transform { op, numeric, at, source, truncation, nodes, input } => {
            let cfg = NumericConfig::default().with_truncation(truncation);
            cfg.validate()?;
            if numeric {
                let (Some(at), Some(source)) = (at, source) else {
                    return Err(CliError::Usage("--numeric needs --at and --source".into()));
                };
                print_json(&numeric_transform(op, &source, at, &cfg, nodes)?);
            } else {
                if at.is_some() || source.is_some() {
                    return Err(CliError::Usage("--at and --source require --numeric".into()));
                }
                let p = read_polynomial(input.as_deref())?;
                let out = match op {
                    Op::Fft => fft_poly(&p),
                    Op::Ifft => ifft_poly(&p),
                    Op::Rft => rft_poly(&p),
                    Op::Irft => irft_poly(&p),
                };
                print_json(&out);
            }
        }
        Command::Special { family, n, alpha, a, x, k } => {
            special(family, n, alpha.as_deref(), a.as_deref(), x.as_deref(), k)?;
        }
        Command::Fractional { kind, order, at, source, truncation } => {
            let cfg = NumericConfig::default().with_truncation(truncation);
            let src = Builtin::parse(&source)?;
            let estimate = match kind {
                FractionalKind::Derivative => fractional_derivative(&src.taylor()?, order, at, &cfg)?,
                FractionalKind::Difference => match src {
                    Builtin::GammaSamples => fractional_difference(&src.samples()?, order, at, &cfg)?,
                    _ => fractional_difference(&src.callable(), order, at, &cfg)?,
                },
            };
            print_json(&estimate_json(&estimate));
        }
        Command::Zeta { s, terms } => {
            let series = zeta_formal_series(s, terms)?;
            let lead = -1.0 / (s - 1.0);
            let partial_sums: Vec<f64> = series
                .terms
                .iter()
                .scan(lead, |acc, t| {
                    *acc += t;
                    Some(*acc)
                })
                .collect();
            print_json(&json!({
                "s": s,
                "partial_sum": series.partial_sum,
                "partial_sums": partial_sums,
                "terms": series.terms,
            }));
        }
        Command::Verify { filter, seed, json, parallel } => {
            let reports = run_all(filter.as_deref(), seed, parallel)?;
            let summary = Summary::of(&reports);
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&reports).expect("serializable reports");
                fs::write(&path, text + "\n")?;
            }
            emit(&format!("{}{summary}\n", format_table(&reports)));
            if !summary.all_passed() {
                return Err(CliError::Verification(format!("verification failed: {summary}")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
