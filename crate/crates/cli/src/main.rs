//! `malmquist`: find and certify the rational solutions of
//! `f(z+1) = R(z, f(z))` and `f'(z) = R(z, f(z))`.
//!
//! Exit codes: 0 success, 1 error, 2 some degree left unresolved,
//! 3 the candidate given to `verify` is not a solution.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use malmquist_core::parse::{parse_equation, parse_ratfunc};
use malmquist_core::{solve_all, verify_solution, EquationKind, Error, REq, SolveOptions};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "malmquist", version, about = "Exact rational solutions of first-order Malmquist-type equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every solution in Q(z) up to the degree bound.
    Solve(SolveArgs),
    /// Check whether a rational function solves the equation.
    Verify(VerifyArgs),
    /// Print the degree, count and height bounds.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Difference,
    Differential,
}

impl From<Kind> for EquationKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Difference => EquationKind::Difference,
            Kind::Differential => EquationKind::Differential,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args)]
struct EquationArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// R(z, w) as a rational expression in z and w (f is accepted for w).
    #[arg(long, allow_hyphen_values = true)]
    equation: String,
}

impl EquationArgs {
    fn parse(&self) -> Result<REq, Error> {
        parse_equation(self.kind.into(), &self.equation)
    }
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("must be a positive number of seconds".into())
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    eq: EquationArgs,
    /// Only search degrees up to N (required when deg_w(R) is below the
    /// kind's threshold).
    #[arg(long, value_name = "N")]
    max_degree: Option<usize>,
    /// Gröbner pair reductions allowed per chart.
    #[arg(long, value_name = "N", default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    chart_steps: u64,
    /// Wall-clock seconds allowed per chart.
    #[arg(long, value_name = "S", default_value_t = 30.0, value_parser = positive_seconds)]
    chart_seconds: f64,
    /// Wall-clock seconds allowed for the whole run.
    #[arg(long, value_name = "S", value_parser = positive_seconds)]
    total_seconds: Option<f64>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    eq: EquationArgs,
    /// Candidate solution, a rational expression in z.
    #[arg(long = "f", value_name = "EXPR", allow_hyphen_values = true)]
    f: String,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    eq: EquationArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Solve(a) => {
            let r = a.eq.parse()?;
            let defaults = SolveOptions::default();
            let opts = SolveOptions {
                max_degree: a.max_degree,
                chart_steps: a.chart_steps,
                chart_seconds: a.chart_seconds,
                workers: a.workers.map_or(defaults.workers, |w| w as usize),
                total_seconds: a.total_seconds,
            };
            let rep = solve_all(&r, &opts)?;
            let j = report::solve_json(&rep);
            match a.output {
                Output::Json => print_json(&j),
                Output::Text => print!("{}", report::solve_text(&j)),
            }
            Ok(if rep.any_unresolved() { 2 } else { 0 })
        }
        Command::Verify(a) => {
            let r = a.eq.parse()?;
            let f = parse_ratfunc(&a.f)?;
            let v = verify_solution(&r, &f);
            let j = report::verify_json(&r, &f, &v);
            match a.output {
                Output::Json => print_json(&j),
                Output::Text => print!("{}", report::verify_text(&j, r.kind())),
            }
            Ok(if v.is_valid() { 0 } else { 3 })
        }
        Command::Bounds(a) => {
            let r = a.eq.parse()?;
            let c = report::certificate_json(&r);
            match a.output {
                Output::Json => print_json(&c),
                Output::Text => print!("{}", report::certificate_text(&c)),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
