use clap::{Args, Parser, Subcommand};
use resolvent_core::radical::BranchConvention;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "resolvent", version, about = "Certified polynomial roots by resolvent equations")]
pub struct Cli {
    /// Emit one self-contained JSON document instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Relative certification tolerance (residual <= tol * scale).
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol: Option<f64>,
    /// Largest half-degree for reciprocal factoring and decomposition, and
    /// largest root index for the explorer.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_n: usize,
    /// Iteration cap of the numeric oracle used for degree >= 5.
    #[arg(long, global = true, default_value_t = 500)]
    pub max_iterations: usize,
    /// Branch convention for n-th roots; only `principal` is supported.
    #[arg(long, global = true, default_value = "principal", value_parser = branch_convention)]
    pub branch_convention: String,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn tolerance(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_TOL)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a polynomial, choosing the method by degree and shape.
    Solve {
        #[command(flatten)]
        poly: PolyArgs,
        /// Route quartics through the squared (t-) resolvent.
        #[arg(long)]
        squared: bool,
    },
    /// Print the resolvent of a quadratic, cubic or quartic.
    Resolvent {
        #[command(flatten)]
        poly: PolyArgs,
        /// For quartics, the resolvent whose roots are the squares.
        #[arg(long)]
        squared: bool,
    },
    /// Factor a palindromic polynomial into quadratics y^2 + alpha y + 1.
    ReciprocalFactor {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Solve a de Moivre polynomial, given as text or by (n, alpha, t).
    Moivre {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, requires_all = ["alpha", "t"], conflicts_with_all = ["expr", "coeffs"])]
        n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// The n-th root of beta, a rational.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Partial fractions and antiderivative of 1 / (y^2n + p y^n + 1).
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Re-certify a JSON document produced by this tool ("-" reads stdin).
    Verify { path: String },
    /// Sum n-th roots of four values over branch orbits.
    ExploreQuintic {
        /// Complex value as "re,im" (or a bare real).
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        c: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        d: String,
        #[arg(long, default_value_t = 5)]
        n: u32,
        /// Enumerate every orbit instead of the paired one.
        #[arg(long)]
        full: bool,
        /// Required product nroot(A) * nroot(B).
        #[arg(long, allow_hyphen_values = true)]
        ab_product: Option<String>,
        /// Required product nroot(C) * nroot(D).
        #[arg(long, allow_hyphen_values = true)]
        cd_product: Option<String>,
        /// Run on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Polynomial text, e.g. "x^3 - 6x - 9".
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,
    /// Ascending coefficients instead of text, e.g. "-9,-6,0,1".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "expr")]
    pub coeffs: Option<String>,
    /// Variable used to render --coeffs input.
    #[arg(long)]
    pub var: Option<char>,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("'{s}' is not a positive number")),
    }
}

fn branch_convention(s: &str) -> Result<String, String> {
    BranchConvention::parse(s)
        .map(|c| c.name().to_string())
        .ok_or_else(|| format!("unsupported branch convention '{s}' (supported: principal)"))
}
