use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cfkcalc::invariants::{upsilon_knot, InvariantReport, UpsilonConfig, DEFAULT_CAP};
use cfkcalc::knots::{build, parse, KnotExpr};
use cfkcalc::pl::format_rational;
use cfkcalc::reduce::{simplify, standard_form, StandardForm};
use cfkcalc::verify::{self, MANIFEST};
use clap::{Args, Parser, Subcommand};

/// Knot Floer concordance invariants of sums of torus knots and their cables.
#[derive(Parser)]
#[command(name = "cfkcalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print tau, epsilon, a1, Upsilon and its largest slope as JSON.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// Print Upsilon as CSV with columns t,value.
    Upsilon {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Sample at t = 2k/N for k = 0..=N.
        #[arg(long, value_name = "N", conflicts_with = "breakpoints")]
        samples: Option<u32>,
        /// Print the breakpoints (the default).
        #[arg(long)]
        breakpoints: bool,
        #[command(flatten)]
        cap: Cap,
    },
    /// Print the complex as JSON, write it to a file, or print its standard form.
    Complex {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_name = "PATH", conflicts_with = "standard_form")]
        export: Option<PathBuf>,
        #[arg(long)]
        standard_form: bool,
    },
    /// Recompute the published values and report each check.
    VerifyPaper,
}

#[derive(Args)]
struct Cap {
    /// Largest number of grading-0 generators per Upsilon computation.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

impl Cap {
    fn config(&self) -> UpsilonConfig {
        UpsilonConfig { cap: self.cap }
    }
}

fn knot(text: &str) -> Result<KnotExpr, String> {
    parse(text).map_err(|e| format!("{text:?}: {e}"))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, String> {
    let io = |e: io::Error| e.to_string();
    match cli.command {
        Command::Invariants { expr, cap } => {
            let report = InvariantReport::for_knot(&knot(&expr)?, &cap.config())
                .map_err(|e| e.to_string())?;
            writeln!(out, "{}", report.to_json()).map_err(io)?;
        }
        Command::Upsilon {
            expr, samples, cap, ..
        } => {
            let f = upsilon_knot(&knot(&expr)?, &cap.config()).map_err(|e| e.to_string())?;
            let rows = match samples {
                Some(n) => f.samples(n).map_err(|e| e.to_string())?,
                None => f.breakpoints().to_vec(),
            };
            writeln!(out, "t,value").map_err(io)?;
            for (t, v) in rows {
                writeln!(out, "{},{}", format_rational(t), format_rational(v)).map_err(io)?;
            }
        }
        Command::Complex {
            expr,
            export,
            standard_form: form,
        } => {
            let c = build(&knot(&expr)?).map_err(|e| e.to_string())?;
            if form {
                let basis = simplify(&c).map_err(|e| e.to_string())?;
                match standard_form(&basis) {
                    sf @ StandardForm::Standard(_) => writeln!(out, "{sf}").map_err(io)?,
                    StandardForm::NotStandard(why) => return Err(format!("not standard: {why}")),
                }
            } else if let Some(path) = export {
                fs::write(&path, c.to_json() + "\n")
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            } else {
                writeln!(out, "{}", c.to_json()).map_err(io)?;
            }
        }
        Command::VerifyPaper => {
            let mut failures = 0;
            for check in MANIFEST {
                let outcome = verify::run(check);
                let status = if outcome.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} [{}] {check}", check.group).map_err(io)?;
                if !outcome.passed {
                    failures += 1;
                    writeln!(out, "     found {}", outcome.found).map_err(io)?;
                }
            }
            writeln!(
                out,
                "{} of {} checks passed",
                MANIFEST.len() - failures,
                MANIFEST.len()
            )
            .map_err(io)?;
            return Ok(failures == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(message) => {
            let _ = out.flush();
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
