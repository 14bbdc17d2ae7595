//! Command-line front end: expression parsing, method dispatch and
//! structured output for `resolvent-core`.

pub mod cli;
pub mod closed_form;
pub mod commands;
pub mod document;
pub mod error;
pub mod parse;
pub mod table;
pub mod verify;

use std::io::Read;

use resolvent_core::moivre::MoivreForm;
use resolvent_core::Execution;

pub use cli::{Cli, Command};
pub use document::{Document, Envelope};
pub use error::CliError;
pub use parse::{parse_poly, ParseError};

use commands::{complex_arg, rational_arg, read_poly, ExploreArgs};
use error::{EXIT_CERTIFICATION, EXIT_OK};

/// What one invocation prints and how it exits.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn build(cli: &Cli) -> Result<Document, CliError> {
    let tol = cli.tolerance();
    Ok(match &cli.command {
        Command::Solve { poly, squared } => {
            let (p, var) = read_poly(poly, 'x')?;
            let opts = commands::SolveOptions {
                squared: *squared,
                tol,
                max_n: cli.max_n,
                max_iterations: cli.max_iterations,
            };
            Document::Solve(commands::solve(&p, var, &opts)?)
        }
        Command::Resolvent { poly, squared } => {
            let (p, var) = read_poly(poly, 'x')?;
            Document::Resolvent(commands::resolvent(&p, var, *squared)?)
        }
        Command::ReciprocalFactor { poly } => {
            let (p, var) = read_poly(poly, 'y')?;
            Document::ReciprocalFactor(commands::reciprocal_factor(&p, var, tol, cli.max_n)?)
        }
        Command::Moivre { poly, n, alpha, t } => match (n, alpha, t) {
            (Some(n), Some(alpha), Some(t)) => {
                if *n < 2 {
                    return Err(CliError::Precondition("de Moivre form needs n >= 2".into()));
                }
                let form = MoivreForm::new(*n, rational_arg("alpha", alpha)?, rational_arg("t", t)?);
                Document::Solve(commands::solve_moivre_form(&form, poly.var.unwrap_or('x'), tol))
            }
            _ => {
                let (p, var) = read_poly(poly, 'x')?;
                Document::Solve(commands::moivre_from_poly(&p, var, tol)?)
            }
        },
        Command::Decompose { n, p } => {
            Document::Decompose(commands::decompose(*n, &rational_arg("p", p)?, tol, cli.max_n)?)
        }
        Command::ExploreQuintic {
            a,
            b,
            c,
            d,
            n,
            full,
            ab_product,
            cd_product,
            sequential,
        } => {
            let args = ExploreArgs {
                values: [
                    complex_arg("a", a)?,
                    complex_arg("b", b)?,
                    complex_arg("c", c)?,
                    complex_arg("d", d)?,
                ],
                n: *n,
                full: *full,
                ab_product: ab_product.as_deref().map(|s| complex_arg("ab-product", s)).transpose()?,
                cd_product: cd_product.as_deref().map(|s| complex_arg("cd-product", s)).transpose()?,
                execution: if *sequential { Execution::Sequential } else { Execution::Parallel },
            };
            Document::Exploration(commands::explore(&args, cli.max_n)?)
        }
        Command::Verify { .. } => unreachable!("verify is handled separately"),
    })
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize") + "\n"
}

fn failure(cli: &Cli, e: CliError) -> Outcome {
    if cli.json {
        Outcome {
            stdout: to_json(&e.report()),
            stderr: String::new(),
            code: e.exit_code(),
        }
    } else {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

/// Verifies the document text `input`.
pub fn run_verify(cli: &Cli, input: &str) -> Outcome {
    let result = verify::read_document(input).and_then(|doc| verify::verify(&doc, cli.tol));
    match result {
        Ok(v) => Outcome {
            stdout: if cli.json { to_json(&v) } else { table::render_verification(&v) },
            stderr: String::new(),
            code: if v.pass { EXIT_OK } else { EXIT_CERTIFICATION },
        },
        Err(e) => failure(cli, e),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if let Command::Verify { path } = &cli.command {
        return match read_input(path) {
            Ok(text) => run_verify(cli, &text),
            Err(e) => failure(cli, e),
        };
    }
    match build(cli) {
        Ok(doc) => {
            let code = if doc.certified() { EXIT_OK } else { EXIT_CERTIFICATION };
            let stdout = if cli.json {
                to_json(&Envelope::new(doc))
            } else {
                table::render(&doc)
            };
            let stderr = if code == EXIT_OK {
                String::new()
            } else {
                "error: certification failed: some residual exceeds tol * scale\n".into()
            };
            Outcome { stdout, stderr, code }
        }
        Err(e) => failure(cli, e),
    }
}
