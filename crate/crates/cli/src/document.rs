//! Structured output documents. Field names and nesting are a compatibility
//! contract: see `docs/schema.md`.

use resolvent_core::complex::{parse_rational, rational_to_string, ExactRational};
use resolvent_core::resolvent::{ResolventReport, RootCertificate};
use resolvent_core::{ComplexValue, Polynomial};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexValue> for Complex {
    fn from(z: ComplexValue) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

impl From<Complex> for ComplexValue {
    fn from(z: Complex) -> Self {
        ComplexValue::new(z.re, z.im)
    }
}

pub fn complexes(zs: &[ComplexValue]) -> Vec<Complex> {
    zs.iter().map(|&z| z.into()).collect()
}

pub fn values(zs: &[Complex]) -> Vec<ComplexValue> {
    zs.iter().map(|&z| z.into()).collect()
}

pub fn parse_rational_field(field: &str, text: &str) -> Result<ExactRational, CliError> {
    parse_rational(text).ok_or_else(|| CliError::Document(format!("{field}: '{text}' is not a rational")))
}

/// A polynomial as canonical text plus exact ascending coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub text: String,
    pub var: String,
    pub coeffs: Vec<String>,
}

impl PolyDoc {
    pub fn new(p: &Polynomial, var: char) -> Self {
        PolyDoc {
            text: p.render(var),
            var: var.to_string(),
            coeffs: p.coeffs().iter().map(rational_to_string).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Polynomial, CliError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_rational_field("coeffs", c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }

    pub fn var_char(&self) -> char {
        self.var.chars().next().unwrap_or('x')
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootDoc {
    pub closed_form: Option<String>,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub scale: f64,
}

impl From<&RootCertificate> for RootDoc {
    fn from(r: &RootCertificate) -> Self {
        RootDoc {
            closed_form: r.closed_form.as_ref().map(|e| e.render()),
            re: r.numeric.re,
            im: r.numeric.im,
            residual: r.residual,
            scale: r.scale,
        }
    }
}

impl RootDoc {
    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoivreDoc {
    pub n: u32,
    pub alpha: String,
    pub t: String,
    pub beta: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveDocument {
    pub method: String,
    pub source: PolyDoc,
    pub resolvent: Option<PolyDoc>,
    pub resolvent_roots: Vec<Complex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moivre: Option<MoivreDoc>,
    pub roots: Vec<RootDoc>,
    pub tolerance: f64,
    pub certified: bool,
    pub diagnostics: Vec<String>,
}

impl SolveDocument {
    pub fn from_report(report: &ResolventReport, var: char, resolvent_var: char, tolerance: f64) -> Self {
        let has_resolvent = report.resolvent.degree().is_some_and(|d| d >= 1);
        SolveDocument {
            method: report.method.tag().to_string(),
            source: PolyDoc::new(&report.source, var),
            resolvent: has_resolvent.then(|| PolyDoc::new(&report.resolvent, resolvent_var)),
            resolvent_roots: complexes(&report.resolvent_roots),
            moivre: None,
            roots: report.roots.iter().map(RootDoc::from).collect(),
            tolerance,
            certified: report.roots.iter().all(|r| r.residual <= tolerance * r.scale),
            diagnostics: report.diagnostics.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolventDocument {
    pub source: PolyDoc,
    pub squared: bool,
    /// `s` in `x = y + s` taking the source to its depressed form.
    pub shift: String,
    pub depressed: PolyDoc,
    pub resolvent: PolyDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub alpha: Complex,
    pub exact: Option<String>,
    pub closed_form: Option<String>,
    pub roots: [Complex; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReciprocalDocument {
    pub source: PolyDoc,
    pub unit_factors: usize,
    pub u_equation: PolyDoc,
    pub factors: Vec<FactorDoc>,
    pub closed_form: bool,
    pub roots: Vec<RootDoc>,
    pub tolerance: f64,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FractionDoc {
    pub alpha: Complex,
    pub lin_coeff: Complex,
    pub const_coeff: Complex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum InverseDoc {
    /// `amplitude * atan((2y + alpha) / sqrt_disc)`
    Circular { amplitude: Complex, sqrt_disc: Complex },
    /// `amplitude * ln((2y + alpha - sqrt_disc) / (2y + alpha + sqrt_disc))`
    Hyperbolic { amplitude: Complex, sqrt_disc: Complex },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AntiderivativeDoc {
    pub alpha: Complex,
    pub log_coeff: Complex,
    pub inverse: InverseDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleDoc {
    pub y: Complex,
    /// `1 / (y^2n + p y^n + 1)`
    pub target: Complex,
    pub recombined: Complex,
    pub relative_error: f64,
    /// Central-difference derivative of the antiderivative minus the target.
    pub derivative_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeDocument {
    pub n: usize,
    pub p: String,
    pub trinomial: PolyDoc,
    pub u_equation: PolyDoc,
    pub alphas: Vec<Complex>,
    pub partial_fractions: Vec<FractionDoc>,
    pub antiderivative: Vec<AntiderivativeDoc>,
    pub samples: Vec<SampleDoc>,
    pub tolerance: f64,
    pub derivative_tolerance: f64,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub tuples: Vec<[u32; 4]>,
    pub values: Vec<Complex>,
    pub coeffs: Vec<Complex>,
    pub max_imag: f64,
    pub subleading: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplorationDocument {
    pub n: u32,
    pub strategy: String,
    pub values: [Complex; 4],
    pub ab_product: Option<Complex>,
    pub cd_product: Option<Complex>,
    pub base_radicals: [Complex; 4],
    pub tuple_count: usize,
    pub candidates: Vec<CandidateDoc>,
    pub best: usize,
    pub warnings: Vec<String>,
}

/// Every document the tool emits and `verify` accepts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Solve(SolveDocument),
    Resolvent(ResolventDocument),
    ReciprocalFactor(ReciprocalDocument),
    Decompose(DecomposeDocument),
    Exploration(ExplorationDocument),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Solve(_) => "solve",
            Document::Resolvent(_) => "resolvent",
            Document::ReciprocalFactor(_) => "reciprocal-factor",
            Document::Decompose(_) => "decompose",
            Document::Exploration(_) => "exploration",
        }
    }

    /// Whether the producing run met all of its residual bounds.
    pub fn certified(&self) -> bool {
        match self {
            Document::Solve(d) => d.certified,
            Document::ReciprocalFactor(d) => d.certified,
            Document::Decompose(d) => d.certified,
            Document::Resolvent(_) | Document::Exploration(_) => true,
        }
    }
}

/// The envelope written with `--json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    #[serde(flatten)]
    pub document: Document,
}

impl Envelope {
    pub fn new(document: Document) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            document,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationDocument {
    pub kind: String,
    pub document_kind: String,
    pub tolerance: f64,
    pub checks: Vec<CheckDoc>,
    pub pass: bool,
}
