//! Independent re-certification of emitted documents.

use resolvent_core::complex::{rational_to_string, to_complex};
use resolvent_core::moivre::{build_moivre_poly, MoivreForm};
use resolvent_core::poly::{expand_roots, residual_scale_complex, eval_complex};
use resolvent_core::radical::unity;
use resolvent_core::reciprocal::{trinomial, trinomial_u_equation, u_equation};
use resolvent_core::resolvent::{resolvent_of, Method};
use resolvent_core::{ComplexValue, Polynomial};

use crate::closed_form::parse_radical;
use crate::commands::{antiderivative_term, fraction_term, sample, DERIVATIVE_TOL};
use crate::document::*;
use crate::error::CliError;
use crate::parse::parse_poly;

/// Closed forms are evaluated in plain f64, which can repeat cancellations
/// the numeric path avoids; they must land on their root within this
/// relative distance and nearer to it than to any other root. The residual
/// bound applies to the numeric roots.
pub const CLOSED_FORM_EVAL_TOL: f64 = 1e-6;

#[derive(Default)]
struct Checks(Vec<CheckDoc>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(CheckDoc {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn bound(&mut self, name: impl Into<String>, value: f64, bound: f64) {
        self.add(name, value <= bound, format!("{value:e} <= {bound:e}"));
    }
}

fn relative(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn check_poly_doc(checks: &mut Checks, name: &str, doc: &PolyDoc) -> Result<Polynomial, CliError> {
    let p = doc.to_poly()?;
    let agrees = parse_poly(&doc.text).map(|q| q.poly == p).unwrap_or(false);
    checks.add(format!("{name}.text"), agrees, format!("'{}' matches coeffs", doc.text));
    Ok(p)
}

fn check_exact(checks: &mut Checks, name: &str, expected: &Polynomial, found: &Polynomial) {
    checks.add(
        name,
        expected == found,
        format!("expected {}, found {}", expected.render('z'), found.render('z')),
    );
}

fn check_roots(checks: &mut Checks, p: &Polynomial, roots: &[RootDoc], tol: f64) {
    let degree = p.degree().unwrap_or(0);
    checks.add(
        "root-count",
        roots.len() == degree,
        format!("{} roots for degree {degree}", roots.len()),
    );
    for (i, r) in roots.iter().enumerate() {
        let z = r.value();
        let residual = p.eval(z).norm();
        let scale = p.residual_scale(z);
        checks.bound(format!("roots[{i}].residual"), residual, tol * scale);
        if let Some(text) = &r.closed_form {
            match parse_radical(text) {
                Ok(e) => {
                    let v = e.eval();
                    let own = (v - z).norm();
                    checks.bound(format!("roots[{i}].closed_form"), own / z.norm().max(1.0), CLOSED_FORM_EVAL_TOL);
                    let nearest = roots
                        .iter()
                        .all(|w| (v - w.value()).norm() >= own - 1e-12 * w.value().norm().max(1.0));
                    checks.add(format!("roots[{i}].closed_form.nearest"), nearest, "closed form lands on this root");
                }
                Err(err) => checks.add(format!("roots[{i}].closed_form"), false, err.to_string()),
            }
        }
    }
}

fn check_values_are_roots(checks: &mut Checks, name: &str, p: &Polynomial, values: &[Complex], tol: f64) {
    for (i, &v) in values.iter().enumerate() {
        let z: ComplexValue = v.into();
        checks.bound(format!("{name}[{i}]"), p.eval(z).norm(), tol * p.residual_scale(z));
    }
}

fn verify_solve(d: &SolveDocument, tol: f64, checks: &mut Checks) -> Result<(), CliError> {
    let p = check_poly_doc(checks, "source", &d.source)?;
    let method = Method::from_tag(&d.method);
    checks.add("method", method.is_some(), format!("tag '{}'", d.method));
    check_roots(checks, &p, &d.roots, tol);
    let resolvent = d
        .resolvent
        .as_ref()
        .map(|r| check_poly_doc(checks, "resolvent", r))
        .transpose()?;
    let expected = match method {
        Some(Method::CubicResolvent | Method::QuarticResolvent) => Some(resolvent_of(&p, false)?.0),
        Some(Method::QuarticSquaredResolvent) => Some(resolvent_of(&p, true)?.0),
        Some(Method::Reciprocal) => {
            let mut even = p.monic();
            let unit = Polynomial::from_ints(&[1, 1]);
            if even.degree().unwrap_or(0) % 2 == 1 {
                even = even.divmod(&unit)?.0;
            }
            Some(u_equation(&even)?.poly)
        }
        Some(Method::Moivre) => match &d.moivre {
            Some(m) => {
                let form = MoivreForm::new(
                    m.n,
                    parse_rational_field("moivre.alpha", &m.alpha)?,
                    parse_rational_field("moivre.t", &m.t)?,
                );
                checks.add(
                    "moivre.beta",
                    rational_to_string(&form.beta()) == m.beta,
                    format!("beta = t^n = {}", rational_to_string(&form.beta())),
                );
                check_exact(checks, "moivre.form", &build_moivre_poly(&form), &p.monic());
                Some(form.resolvent())
            }
            None => {
                checks.add("moivre", false, "moivre method without form");
                None
            }
        },
        _ => None,
    };
    if let Some(expected) = expected {
        match &resolvent {
            Some(found) => {
                check_exact(checks, "resolvent.exact", &expected, found);
                check_values_are_roots(checks, "resolvent_roots", found, &d.resolvent_roots, tol);
            }
            None => checks.add("resolvent", false, "missing resolvent"),
        }
    }
    Ok(())
}

fn verify_resolvent(d: &ResolventDocument, checks: &mut Checks) -> Result<(), CliError> {
    let p = check_poly_doc(checks, "source", &d.source)?;
    let depressed = check_poly_doc(checks, "depressed", &d.depressed)?;
    let r = check_poly_doc(checks, "resolvent", &d.resolvent)?;
    let (expected, shift) = resolvent_of(&p, d.squared)?;
    check_exact(checks, "resolvent.exact", &expected, &r);
    checks.add(
        "shift",
        rational_to_string(&shift) == d.shift,
        format!("shift {}", rational_to_string(&shift)),
    );
    check_exact(checks, "depressed.exact", &p.depress()?.0, &depressed);
    // the shifted depressed form is the monic source
    check_exact(checks, "depressed.shift", &p.monic(), &depressed.shift(&-shift));
    Ok(())
}

fn verify_reciprocal(d: &ReciprocalDocument, tol: f64, checks: &mut Checks) -> Result<(), CliError> {
    let p = check_poly_doc(checks, "source", &d.source)?;
    let u = check_poly_doc(checks, "u_equation", &d.u_equation)?;
    checks.add("palindromic", p.is_palindromic(), "coefficients read the same both ways");
    let mut even = p.monic();
    for _ in 0..d.unit_factors {
        even = even.divmod(&Polynomial::from_ints(&[1, 1]))?.0;
    }
    check_exact(checks, "u_equation.exact", &u_equation(&even)?.poly, &u);
    check_roots(checks, &p, &d.roots, tol);
    checks.add(
        "factor-count",
        d.factors.len() == u.degree().unwrap_or(0),
        format!("{} factors", d.factors.len()),
    );
    let mut product = vec![ComplexValue::new(1.0, 0.0)];
    for _ in 0..d.unit_factors {
        product = resolvent_core::poly::mul_complex(&product, &[1.0.into(), 1.0.into()]);
    }
    for (i, f) in d.factors.iter().enumerate() {
        let alpha: ComplexValue = f.alpha.into();
        checks.bound(format!("factors[{i}].alpha"), u.eval(alpha).norm(), tol * u.residual_scale(alpha));
        if let Some(text) = &f.exact {
            let q = parse_rational_field("exact", text)?;
            checks.add(format!("factors[{i}].exact"), u.eval_exact(&q) == num_traits::Zero::zero(), format!("u({text}) = 0"));
        }
        if let Some(text) = &f.closed_form {
            match parse_radical(text) {
                Ok(e) => checks.bound(format!("factors[{i}].closed_form"), relative(e.eval(), alpha), CLOSED_FORM_EVAL_TOL),
                Err(err) => checks.add(format!("factors[{i}].closed_form"), false, err.to_string()),
            }
        }
        let [r1, r2] = f.roots.map(ComplexValue::from);
        checks.bound(format!("factors[{i}].root_product"), (r1 * r2 - 1.0).norm(), tol);
        for r in [r1, r2] {
            checks.bound(format!("factors[{i}].root"), (r * r + alpha * r + 1.0).norm(), tol * (1.0 + alpha.norm() * r.norm().max(1.0) + r.norm().max(1.0).powi(2)));
        }
        product = resolvent_core::poly::mul_complex(&product, &[1.0.into(), alpha, 1.0.into()]);
    }
    let monic = p.monic().to_complex_coeffs();
    let coeff_scale = monic.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let dev = if product.len() == monic.len() {
        product.iter().zip(&monic).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    checks.bound("recombination", dev, tol * coeff_scale);
    Ok(())
}

fn verify_decompose(d: &DecomposeDocument, tol: f64, checks: &mut Checks) -> Result<(), CliError> {
    let p = parse_rational_field("p", &d.p)?;
    let tri = check_poly_doc(checks, "trinomial", &d.trinomial)?;
    let u = check_poly_doc(checks, "u_equation", &d.u_equation)?;
    check_exact(checks, "trinomial.exact", &trinomial(d.n, &p), &tri);
    check_exact(checks, "u_equation.exact", &trinomial_u_equation(d.n, &p), &u);
    check_exact(checks, "u_equation.of_trinomial", &u_equation(&tri)?.poly, &u);
    check_values_are_roots(checks, "alphas", &u, &d.alphas, tol);
    checks.add(
        "term-count",
        d.partial_fractions.len() == d.n && d.antiderivative.len() == d.n,
        format!("{} fractions, {} antiderivative terms", d.partial_fractions.len(), d.antiderivative.len()),
    );
    let fractions: Vec<_> = d.partial_fractions.iter().map(fraction_term).collect();
    let anti: Vec<_> = d.antiderivative.iter().map(antiderivative_term).collect();
    let pc = to_complex(&p);
    for (i, s) in d.samples.iter().enumerate() {
        let fresh = sample(d.n, pc, &fractions, &anti, s.y.into());
        checks.bound(format!("samples[{i}].recombination"), fresh.relative_error, tol);
        checks.bound(format!("samples[{i}].derivative"), fresh.derivative_error, DERIVATIVE_TOL);
    }
    checks.add("samples", !d.samples.is_empty(), format!("{} sample points", d.samples.len()));
    Ok(())
}

fn verify_exploration(d: &ExplorationDocument, tol: f64, checks: &mut Checks) -> Result<(), CliError> {
    let n = d.n;
    let base = d.base_radicals.map(ComplexValue::from);
    for i in 0..4 {
        let v: ComplexValue = d.values[i].into();
        checks.bound(format!("base_radicals[{i}]"), relative(base[i].powu(n), v), tol);
    }
    if let Some(t) = d.ab_product {
        if d.values[0] != (Complex { re: 0.0, im: 0.0 }) {
            checks.bound("ab_product", relative(base[0] * base[1], t.into()), tol);
        }
    }
    if let Some(t) = d.cd_product {
        if d.values[2] != (Complex { re: 0.0, im: 0.0 }) && d.values[3] != (Complex { re: 0.0, im: 0.0 }) {
            checks.bound("cd_product", relative(base[2] * base[3], t.into()), tol);
        }
    }
    let expected_orbits = match d.strategy.as_str() {
        "paired" => Some(1),
        "full" => Some((n as usize).pow(3)),
        _ => None,
    };
    checks.add(
        "candidate-count",
        expected_orbits == Some(d.candidates.len()) && d.tuple_count == d.candidates.len() * n as usize,
        format!("{} candidates, {} tuples, strategy '{}'", d.candidates.len(), d.tuple_count, d.strategy),
    );
    let radical_scale: f64 = base.iter().map(|z| z.norm()).sum::<f64>().max(1.0);
    let mut best = (0, f64::INFINITY);
    for (i, c) in d.candidates.iter().enumerate() {
        let shape = c.tuples.len() == n as usize && c.values.len() == n as usize && c.coeffs.len() == n as usize + 1;
        checks.add(format!("candidates[{i}].shape"), shape, "n tuples, n values, n + 1 coefficients");
        if !shape {
            continue;
        }
        let mut value_dev: f64 = 0.0;
        for (t, v) in c.tuples.iter().zip(&c.values) {
            let sum: ComplexValue = (0..4)
                .map(|k| unity(n, i64::from(t[k] % n)) * base[k])
                .sum();
            value_dev = value_dev.max((sum - ComplexValue::from(*v)).norm());
        }
        checks.bound(format!("candidates[{i}].values"), value_dev, tol * radical_scale);
        let coeffs = expand_roots(&values(&c.values));
        let scale = coeffs.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let dev = coeffs
            .iter()
            .zip(&c.coeffs)
            .map(|(a, b)| (a - ComplexValue::from(*b)).norm())
            .fold(0.0, f64::max);
        checks.bound(format!("candidates[{i}].coeffs"), dev, tol * scale);
        // each value is a root of the candidate polynomial
        let cc = values(&c.coeffs);
        let worst = c
            .values
            .iter()
            .map(|&v| eval_complex(&cc, v.into()).norm() / residual_scale_complex(&cc, v.into()))
            .fold(0.0, f64::max);
        checks.bound(format!("candidates[{i}].roots"), worst, tol);
        let score = c.max_imag + c.subleading;
        if score < best.1 {
            best = (i, score);
        }
        // orbit structure (+1, -1, +1, -1)
        let s0 = c.tuples[0];
        let orbit = c.tuples.iter().enumerate().all(|(s, t)| {
            let s = s as u32;
            t[0] == (s0[0] + s) % n
                && t[1] == (s0[1] + n - s % n) % n
                && t[2] == (s0[2] + s) % n
                && t[3] == (s0[3] + n - s % n) % n
        });
        checks.add(format!("candidates[{i}].orbit"), orbit, "tuples step by (+1, -1, +1, -1)");
    }
    checks.add("best", d.best == best.0, format!("best candidate {}", best.0));
    Ok(())
}

/// Re-checks a document from scratch. The tolerance defaults to the one the
/// document declares.
pub fn verify(doc: &Document, tol_override: Option<f64>) -> Result<VerificationDocument, CliError> {
    let declared = match doc {
        Document::Solve(d) => Some(d.tolerance),
        Document::ReciprocalFactor(d) => Some(d.tolerance),
        Document::Decompose(d) => Some(d.tolerance),
        _ => None,
    };
    let tol = tol_override.or(declared).unwrap_or(crate::cli::DEFAULT_TOL);
    let mut checks = Checks::default();
    match doc {
        Document::Solve(d) => verify_solve(d, tol, &mut checks)?,
        Document::Resolvent(d) => verify_resolvent(d, &mut checks)?,
        Document::ReciprocalFactor(d) => verify_reciprocal(d, tol, &mut checks)?,
        Document::Decompose(d) => verify_decompose(d, tol, &mut checks)?,
        Document::Exploration(d) => verify_exploration(d, tol, &mut checks)?,
    }
    let pass = checks.0.iter().all(|c| c.pass);
    Ok(VerificationDocument {
        kind: "verification".into(),
        document_kind: doc.kind().into(),
        tolerance: tol,
        checks: checks.0,
        pass,
    })
}

pub fn read_document(text: &str) -> Result<Document, CliError> {
    serde_json::from_str::<Envelope>(text)
        .map(|e| e.document)
        .map_err(|e| CliError::Document(e.to_string()))
}
