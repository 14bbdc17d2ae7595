//! Builds documents for each subcommand.

use resolvent_core::complex::{parse_rational, rational_to_string, to_complex, ExactRational};
use resolvent_core::moivre::{build_moivre_poly, detect_moivre, solve_moivre, MoivreForm};
use resolvent_core::oracle::{find_roots_numeric, OracleConfig};
use resolvent_core::radical::RadicalExpr;
use resolvent_core::reciprocal::{
    antiderivative_terms, arc_division_alphas, factor_reciprocal, partial_fractions, trinomial,
    trinomial_u_equation, AntiderivativeTerm, InversePart, PartialFractionTerm, QuadraticFactor,
    ReciprocalFactorization,
};
use resolvent_core::resolvent::{
    resolvent_of, solve_closed_form, solve_closed_form_squared, Method, ResolventReport, RootCertificate,
};
use resolvent_core::sumcheck::{quintic_explorer, BranchStrategy, ExplorationReport, ExplorerConfig};
use resolvent_core::{ComplexValue, Error as CoreError, Execution, Polynomial};

use crate::cli::PolyArgs;
use crate::document::*;
use crate::error::CliError;
use crate::parse::{parse_coeffs, parse_poly};

/// Tolerance of the numeric-derivative check on antiderivatives.
pub const DERIVATIVE_TOL: f64 = 1e-6;
/// Step of the central difference.
pub const DERIVATIVE_STEP: f64 = 1e-5;

/// Fixed evaluation points for decomposition checks, off the real axis
/// where logarithm branch cuts lie.
pub const SAMPLE_POINTS: [(f64, f64); 8] = [
    (0.3, 0.2),
    (-0.45, 0.35),
    (0.8, 0.35),
    (-1.2, 0.6),
    (1.7, -0.25),
    (0.05, -0.9),
    (2.5, 1.1),
    (-0.6, -0.3),
];

pub fn read_poly(args: &PolyArgs, default_var: char) -> Result<(Polynomial, char), CliError> {
    match (&args.expr, &args.coeffs) {
        (Some(text), _) => {
            let parsed = parse_poly(text)?;
            Ok((parsed.poly, args.var.or(parsed.var).unwrap_or(default_var)))
        }
        (None, Some(list)) => Ok((parse_coeffs(list)?, args.var.unwrap_or(default_var))),
        (None, None) => Err(CliError::Input("expected a polynomial expression or --coeffs".into())),
    }
}

pub fn rational_arg(name: &str, text: &str) -> Result<ExactRational, CliError> {
    parse_rational(&text.replace('−', "-"))
        .ok_or_else(|| CliError::Input(format!("--{name}: '{text}' is not a rational")))
}

pub fn complex_arg(name: &str, text: &str) -> Result<ComplexValue, CliError> {
    let bad = || CliError::Input(format!("--{name}: '{text}' is not \"re,im\""));
    let text = text.replace('−', "-");
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re.trim(), im.trim()),
        None => (text.trim(), "0"),
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    if re.is_finite() && im.is_finite() {
        Ok(ComplexValue::new(re, im))
    } else {
        Err(bad())
    }
}

/// Re-certifies every root against `source` at `tol`.
pub fn certify(report: ResolventReport, source: &Polynomial, tol: f64) -> ResolventReport {
    let roots = report
        .roots
        .into_iter()
        .map(|r| RootCertificate::new(source, r.closed_form, r.numeric, tol))
        .collect();
    ResolventReport {
        source: source.clone(),
        roots,
        ..report
    }
}

fn numeric_report(p: &Polynomial, opts: &SolveOptions, diagnostics: Vec<String>) -> Result<ResolventReport, CliError> {
    let tol = opts.tol;
    let cfg = OracleConfig {
        max_iterations: opts.max_iterations,
        ..OracleConfig::default()
    };
    let roots = find_roots_numeric(p, &cfg)?;
    Ok(ResolventReport {
        method: Method::Numeric,
        source: p.clone(),
        resolvent: Polynomial::one(),
        resolvent_roots: Vec::new(),
        roots: roots
            .into_iter()
            .map(|z| RootCertificate::new(p, None, z, tol))
            .collect(),
        radicals: Vec::new(),
        diagnostics,
    })
}

/// `(-alpha + sqrt(alpha^2 - 4)) / 2` on the branch that gives `target`.
fn factor_root_expr(alpha: &RadicalExpr, target: ComplexValue) -> RadicalExpr {
    let disc = RadicalExpr::sum(vec![
        RadicalExpr::product(vec![alpha.clone(), alpha.clone()]),
        RadicalExpr::int(-4),
    ]);
    let half = ExactRational::new(1.into(), 2.into());
    let candidates = (0..2).map(|k| {
        RadicalExpr::sum(vec![
            RadicalExpr::scaled(-half.clone(), alpha.clone()),
            RadicalExpr::scaled(half.clone(), RadicalExpr::root(2, disc.clone(), k)),
        ])
    });
    candidates
        .min_by(|u, v| (u.eval() - target).norm().total_cmp(&(v.eval() - target).norm()))
        .expect("two branches")
}

fn alpha_expr(f: &QuadraticFactor) -> Option<RadicalExpr> {
    f.exact
        .clone()
        .map(RadicalExpr::Const)
        .or_else(|| f.closed_form.clone())
}

fn reciprocal_report(fact: &ReciprocalFactorization, tol: f64) -> ResolventReport {
    let source = &fact.source;
    let mut roots: Vec<RootCertificate> = (0..fact.unit_factors)
        .map(|_| RootCertificate::new(source, Some(RadicalExpr::int(-1)), ComplexValue::new(-1.0, 0.0), tol))
        .collect();
    for f in &fact.factors {
        let expr = alpha_expr(f);
        for r in f.roots() {
            let cf = expr.as_ref().map(|e| factor_root_expr(e, r));
            roots.push(RootCertificate::new(source, cf, r, tol));
        }
    }
    let mut diagnostics = Vec::new();
    if fact.unit_factors > 0 {
        diagnostics.push(format!("divided out (y + 1)^{}", fact.unit_factors));
    }
    if !fact.closed_form {
        diagnostics.push("u-equation roots found numerically".into());
    }
    ResolventReport {
        method: Method::Reciprocal,
        source: source.clone(),
        resolvent: fact.u_equation.poly.clone(),
        resolvent_roots: fact.factors.iter().map(|f| f.alpha).collect(),
        roots,
        radicals: Vec::new(),
        diagnostics,
    }
}

fn moivre_doc(form: &MoivreForm) -> MoivreDoc {
    MoivreDoc {
        n: form.n,
        alpha: rational_to_string(&form.alpha),
        t: rational_to_string(&form.t),
        beta: rational_to_string(&form.beta()),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub squared: bool,
    pub tol: f64,
    pub max_n: usize,
    pub max_iterations: usize,
}

pub fn solve(p: &Polynomial, var: char, opts: &SolveOptions) -> Result<SolveDocument, CliError> {
    let SolveOptions { squared, tol, max_n, .. } = *opts;
    let degree = p.degree().unwrap_or(0);
    if degree == 0 {
        return Err(CoreError::DegreeTooLow { found: p.degree(), min: 1 }.into());
    }
    let mut form = None;
    let report = if degree <= 4 {
        if squared {
            solve_closed_form_squared(p)?
        } else {
            solve_closed_form(p)?
        }
    } else {
        let monic = p.monic();
        if let Some(f) = detect_moivre(&monic) {
            let r = solve_moivre(&f);
            form = Some(f);
            r
        } else if monic.is_palindromic() {
            match factor_reciprocal(&monic, max_n) {
                Ok(fact) => reciprocal_report(&fact, tol),
                Err(e @ CoreError::SizeBound { .. }) => numeric_report(p, opts, vec![format!("palindrome not factored: {e}")])?,
                Err(e) => return Err(e.into()),
            }
        } else {
            numeric_report(p, opts, vec!["no de Moivre or reciprocal structure; numeric oracle".into()])?
        }
    };
    let report = certify(report, p, tol);
    let resolvent_var = if report.method == Method::Reciprocal { 'u' } else { 'z' };
    let mut doc = SolveDocument::from_report(&report, var, resolvent_var, tol);
    doc.moivre = form.as_ref().map(moivre_doc);
    Ok(doc)
}

pub fn solve_moivre_form(form: &MoivreForm, var: char, tol: f64) -> SolveDocument {
    let p = build_moivre_poly(form);
    let report = certify(solve_moivre(form), &p, tol);
    let mut doc = SolveDocument::from_report(&report, var, 'z', tol);
    doc.moivre = Some(moivre_doc(form));
    doc
}

pub fn moivre_from_poly(p: &Polynomial, var: char, tol: f64) -> Result<SolveDocument, CliError> {
    let monic = if p.is_zero() { p.clone() } else { p.monic() };
    let form = detect_moivre(&monic)
        .ok_or_else(|| CliError::Precondition("polynomial is not of de Moivre form".into()))?;
    let report = certify(solve_moivre(&form), p, tol);
    let mut doc = SolveDocument::from_report(&report, var, 'z', tol);
    doc.moivre = Some(moivre_doc(&form));
    Ok(doc)
}

pub fn resolvent(p: &Polynomial, var: char, squared: bool) -> Result<ResolventDocument, CliError> {
    match p.degree() {
        Some(2..=4) => {}
        Some(d) if d > 4 => return Err(CoreError::DegreeUnsupported(d).into()),
        found => return Err(CoreError::DegreeTooLow { found, min: 2 }.into()),
    }
    let (r, shift) = resolvent_of(p, squared)?;
    let (depressed, _) = p.depress()?;
    Ok(ResolventDocument {
        source: PolyDoc::new(p, var),
        squared: squared && p.degree() == Some(4),
        shift: rational_to_string(&shift),
        depressed: PolyDoc::new(&depressed, var),
        resolvent: PolyDoc::new(&r, 'z'),
    })
}

pub fn reciprocal_factor(p: &Polynomial, var: char, tol: f64, max_n: usize) -> Result<ReciprocalDocument, CliError> {
    if p.is_zero() {
        return Err(CoreError::DegreeTooLow { found: None, min: 1 }.into());
    }
    if !p.is_palindromic() {
        return Err(CoreError::NotPalindromic.into());
    }
    let fact = factor_reciprocal(&p.monic(), max_n)?;
    let report = certify(reciprocal_report(&fact, tol), p, tol);
    let roots: Vec<RootDoc> = report.roots.iter().map(RootDoc::from).collect();
    let certified = report.roots.iter().all(|r| r.residual <= tol * r.scale);
    Ok(ReciprocalDocument {
        source: PolyDoc::new(p, var),
        unit_factors: fact.unit_factors,
        u_equation: PolyDoc::new(&fact.u_equation.poly, 'u'),
        factors: fact
            .factors
            .iter()
            .map(|f| FactorDoc {
                alpha: f.alpha.into(),
                exact: f.exact.as_ref().map(rational_to_string),
                closed_form: alpha_expr(f).map(|e| e.render()),
                roots: f.roots().map(Complex::from),
            })
            .collect(),
        closed_form: fact.closed_form,
        roots,
        tolerance: tol,
        certified,
    })
}

pub fn trinomial_value(n: usize, p: ComplexValue, y: ComplexValue) -> ComplexValue {
    let yn = y.powu(n as u32);
    yn * yn + p * yn + 1.0
}

pub fn fraction_term(d: &FractionDoc) -> PartialFractionTerm {
    PartialFractionTerm {
        alpha: d.alpha.into(),
        lin_coeff: d.lin_coeff.into(),
        const_coeff: d.const_coeff.into(),
    }
}

pub fn antiderivative_term(d: &AntiderivativeDoc) -> AntiderivativeTerm {
    let inverse = match d.inverse {
        InverseDoc::Circular { amplitude, sqrt_disc } => InversePart::Circular {
            amplitude: amplitude.into(),
            sqrt_disc: sqrt_disc.into(),
        },
        InverseDoc::Hyperbolic { amplitude, sqrt_disc } => InversePart::Hyperbolic {
            amplitude: amplitude.into(),
            sqrt_disc: sqrt_disc.into(),
        },
    };
    AntiderivativeTerm {
        alpha: d.alpha.into(),
        log_coeff: d.log_coeff.into(),
        inverse,
    }
}

/// Recombination and derivative checks at one point.
pub fn sample(n: usize, p: ComplexValue, fractions: &[PartialFractionTerm], anti: &[AntiderivativeTerm], y: ComplexValue) -> SampleDoc {
    let target = 1.0 / trinomial_value(n, p, y);
    let recombined: ComplexValue = fractions.iter().map(|t| t.eval(y)).sum();
    let relative_error = (recombined - target).norm() / target.norm().max(f64::MIN_POSITIVE);
    let h = DERIVATIVE_STEP;
    let f = |y: ComplexValue| anti.iter().map(|t| t.eval(y)).sum::<ComplexValue>();
    let derivative = (f(y + h) - f(y - h)) / (2.0 * h);
    let derivative_error = (derivative - target).norm() / target.norm().max(1.0);
    SampleDoc {
        y: y.into(),
        target: target.into(),
        recombined: recombined.into(),
        relative_error,
        derivative_error,
    }
}

pub fn decompose(n: usize, p: &ExactRational, tol: f64, max_n: usize) -> Result<DecomposeDocument, CliError> {
    if n == 0 {
        return Err(CoreError::InvalidArgument("n must be >= 1".into()).into());
    }
    if n > max_n {
        return Err(CoreError::SizeBound { n, max: max_n }.into());
    }
    let fractions = partial_fractions(n, p)?;
    let anti = antiderivative_terms(&fractions)?;
    let pc = to_complex(p);
    let samples: Vec<SampleDoc> = SAMPLE_POINTS
        .iter()
        .map(|&(re, im)| sample(n, pc, &fractions, &anti, ComplexValue::new(re, im)))
        .collect();
    let certified = samples
        .iter()
        .all(|s| s.relative_error <= tol && s.derivative_error <= DERIVATIVE_TOL);
    Ok(DecomposeDocument {
        n,
        p: rational_to_string(p),
        trinomial: PolyDoc::new(&trinomial(n, p), 'y'),
        u_equation: PolyDoc::new(&trinomial_u_equation(n, p), 'u'),
        alphas: complexes(&arc_division_alphas(n, p)),
        partial_fractions: fractions
            .iter()
            .map(|t| FractionDoc {
                alpha: t.alpha.into(),
                lin_coeff: t.lin_coeff.into(),
                const_coeff: t.const_coeff.into(),
            })
            .collect(),
        antiderivative: anti
            .iter()
            .map(|t| AntiderivativeDoc {
                alpha: t.alpha.into(),
                log_coeff: t.log_coeff.into(),
                inverse: match t.inverse {
                    InversePart::Circular { amplitude, sqrt_disc } => InverseDoc::Circular {
                        amplitude: amplitude.into(),
                        sqrt_disc: sqrt_disc.into(),
                    },
                    InversePart::Hyperbolic { amplitude, sqrt_disc } => InverseDoc::Hyperbolic {
                        amplitude: amplitude.into(),
                        sqrt_disc: sqrt_disc.into(),
                    },
                },
            })
            .collect(),
        samples,
        tolerance: tol,
        derivative_tolerance: DERIVATIVE_TOL,
        certified,
    })
}

pub fn strategy_name(s: BranchStrategy) -> &'static str {
    match s {
        BranchStrategy::Paired => "paired",
        BranchStrategy::Full => "full",
    }
}

pub struct ExploreArgs {
    pub values: [ComplexValue; 4],
    pub n: u32,
    pub full: bool,
    pub ab_product: Option<ComplexValue>,
    pub cd_product: Option<ComplexValue>,
    pub execution: Execution,
}

pub fn explore(args: &ExploreArgs, max_n: usize) -> Result<ExplorationDocument, CliError> {
    if args.n < 2 {
        return Err(CoreError::InvalidArgument("explorer needs n >= 2".into()).into());
    }
    if args.n as usize > max_n {
        return Err(CoreError::SizeBound { n: args.n as usize, max: max_n }.into());
    }
    let cfg = ExplorerConfig {
        n: args.n,
        strategy: if args.full { BranchStrategy::Full } else { BranchStrategy::Paired },
        ab_product: args.ab_product,
        cd_product: args.cd_product,
        execution: args.execution,
    };
    let report: ExplorationReport = quintic_explorer(args.values, &cfg);
    Ok(ExplorationDocument {
        n: report.n,
        strategy: strategy_name(report.strategy).into(),
        values: args.values.map(Complex::from),
        ab_product: args.ab_product.map(Complex::from),
        cd_product: args.cd_product.map(Complex::from),
        base_radicals: report.base_radicals.map(Complex::from),
        tuple_count: report.tuple_count,
        candidates: report
            .candidates
            .iter()
            .map(|c| CandidateDoc {
                tuples: c.tuples.clone(),
                values: complexes(&c.values),
                coeffs: complexes(&c.coeffs),
                max_imag: c.max_imag,
                subleading: c.subleading,
            })
            .collect(),
        best: report.best,
        warnings: report.warnings,
    })
}
