//! The `rene` command line.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use leversha_core::quartet::{self, Check};
use leversha_core::script::{self, Value};
use leversha_core::{Rational, VarTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rene",
    version,
    about = "Exact verifier for the quartet of isogonal conjugates"
)]
pub struct Cli {
    /// Run this many seeded numeric spot checks after `leversha`.
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    /// Seed for the numeric spot checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Execute a construction script.
    Run { file: PathBuf },
    /// Build the symbolic quartet, check every claim and print the certificate.
    Leversha,
    /// Print the canonical form of one expression.
    Eval {
        #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
        expr: String,
        /// Evaluate numerically at `name=value,...`.
        #[arg(long)]
        subst: Option<String>,
        /// Comma-separated indeterminates in scope.
        #[arg(long, default_value = "m,n,M,N")]
        vars: String,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Run { ref file } => run_script(file, out, err),
        Command::Leversha => leversha(cli.trials, cli.seed.unwrap_or(0), out, err),
        Command::Eval {
            ref expr,
            ref subst,
            ref vars,
        } => eval(expr, subst.as_deref(), vars, out, err),
    }
}

fn run_script(file: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", file.display());
            return EXIT_USAGE;
        }
    };
    let report = script::run_source(&source);
    for outcome in &report.outcomes {
        let _ = writeln!(out, "{outcome}");
    }
    for line in report.failed_asserts() {
        let _ = writeln!(err, "{}:{line}: assertion failed", file.display());
    }
    if let Some(e) = &report.error {
        let _ = writeln!(err, "{}:{e}", file.display());
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn leversha(trials: Option<usize>, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let scene = match quartet::build_scene() {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILED;
        }
    };
    let mut report = quartet::verify_all(&scene);
    if let Some(k) = trials {
        if k == 0 {
            let _ = writeln!(err, "error: --trials must be at least 1");
            return EXIT_USAGE;
        }
        let passed = quartet::numeric_spotcheck(&scene, k, seed);
        report.extra.push(Check::new(
            format!("numeric spot check ({k} trials, seed {seed})"),
            passed,
        ));
    }
    let _ = write!(out, "{}", report.certificate());
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn parse_subst(spec: &str) -> Result<HashMap<String, Rational>, String> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|binding| {
            let (name, value) = binding
                .split_once('=')
                .ok_or_else(|| format!("expected name=value, found `{binding}`"))?;
            let value: Rational = value.trim().parse().map_err(|e| format!("`{binding}`: {e}"))?;
            Ok((name.trim().to_string(), value))
        })
        .collect()
}

fn eval(expr: &str, subst: Option<&str>, vars: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let table = match VarTable::new(names) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: --vars: {e}");
            return EXIT_USAGE;
        }
    };
    let bindings = match subst.map(parse_subst).transpose() {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: --subst: {e}");
            return EXIT_USAGE;
        }
    };
    let value = match script::eval_expression(expr, &table) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILED;
        }
    };
    let Some(bindings) = bindings else {
        let _ = writeln!(out, "{value}");
        return EXIT_OK;
    };
    let numeric = match &value {
        Value::Scalar(s) => s.eval(&bindings).map(|q| q.to_string()),
        Value::Point(p) => p.try_map(|c| c.eval(&bindings)).map(|p| p.to_string()),
        Value::Triangle(t) => t
            .vertices()
            .iter()
            .map(|p| p.try_map(|c| c.eval(&bindings)).map(|p| p.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map(|v| format!("[{}]", v.join(", "))),
    };
    match numeric {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}
