//! Human-readable rendering of documents.

use std::fmt::Write;

use crate::document::*;

fn q(text: &str) -> &str {
    text.strip_suffix("/1").unwrap_or(text)
}

fn cx(z: Complex) -> String {
    if z.im.abs() <= 1e-15 * z.re.abs().max(1.0) {
        format!("{:.12}", z.re)
    } else {
        format!("{:.12} {} {:.12}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
    }
}

fn roots_table(out: &mut String, roots: &[RootDoc]) {
    let _ = writeln!(out, "{:>3}  {:>20}  {:>20}  {:>10}  closed form", "#", "re", "im", "rel.res");
    for (i, r) in roots.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>3}  {:>20.12}  {:>20.12}  {:>10.2e}  {}",
            i,
            r.re,
            r.im,
            r.residual / r.scale,
            r.closed_form.as_deref().unwrap_or("-")
        );
    }
}

pub fn render(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Solve(d) => {
            let _ = writeln!(out, "source:    {}", d.source.text);
            let _ = writeln!(out, "method:    {}", d.method);
            if let Some(m) = &d.moivre {
                let _ = writeln!(out, "form:      n = {}, alpha = {}, t = {}, beta = {}", m.n, q(&m.alpha), q(&m.t), q(&m.beta));
            }
            if let Some(r) = &d.resolvent {
                let _ = writeln!(out, "resolvent: {}", r.text);
                let roots: Vec<String> = d.resolvent_roots.iter().map(|&z| cx(z)).collect();
                let _ = writeln!(out, "           roots {}", roots.join(", "));
            }
            for line in &d.diagnostics {
                let _ = writeln!(out, "note:      {line}");
            }
            let _ = writeln!(
                out,
                "certified: {} (tol {:e})\n",
                if d.certified { "yes" } else { "NO" },
                d.tolerance
            );
            roots_table(&mut out, &d.roots);
        }
        Document::Resolvent(d) => {
            let _ = writeln!(out, "source:    {}", d.source.text);
            let _ = writeln!(out, "depressed: {}  (x = y + {})", d.depressed.text, q(&d.shift));
            let _ = writeln!(out, "resolvent: {}{}", d.resolvent.text, if d.squared { "  [squared]" } else { "" });
        }
        Document::ReciprocalFactor(d) => {
            let _ = writeln!(out, "source:     {}", d.source.text);
            let _ = writeln!(out, "u-equation: {}", d.u_equation.text);
            if d.unit_factors > 0 {
                let _ = writeln!(out, "unit factors: (y + 1)^{}", d.unit_factors);
            }
            for f in &d.factors {
                let alpha = f.exact.as_deref().map(|e| q(e).to_string()).unwrap_or_else(|| cx(f.alpha));
                let _ = writeln!(out, "factor:     y^2 + ({alpha}) y + 1");
            }
            let _ = writeln!(out, "certified:  {} (tol {:e})\n", if d.certified { "yes" } else { "NO" }, d.tolerance);
            roots_table(&mut out, &d.roots);
        }
        Document::Decompose(d) => {
            let _ = writeln!(out, "1 / ({})", d.trinomial.text);
            let _ = writeln!(out, "u-equation: {}", d.u_equation.text);
            let _ = writeln!(out, "{:>24}  {:>24}  {:>24}  inverse", "alpha", "lin", "const");
            for (f, a) in d.partial_fractions.iter().zip(&d.antiderivative) {
                let form = match a.inverse {
                    InverseDoc::Circular { .. } => "atan",
                    InverseDoc::Hyperbolic { .. } => "log",
                };
                let _ = writeln!(out, "{:>24}  {:>24}  {:>24}  {form}", cx(f.alpha), cx(f.lin_coeff), cx(f.const_coeff));
            }
            let worst = d.samples.iter().map(|s| s.relative_error).fold(0.0, f64::max);
            let worst_d = d.samples.iter().map(|s| s.derivative_error).fold(0.0, f64::max);
            let _ = writeln!(
                out,
                "recombination error {worst:.2e}, derivative error {worst_d:.2e}: {}",
                if d.certified { "certified" } else { "NOT certified" }
            );
        }
        Document::Exploration(d) => {
            let _ = writeln!(out, "n = {}, strategy {}, {} tuples", d.n, d.strategy, d.tuple_count);
            for w in &d.warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            let best = &d.candidates[d.best];
            let _ = writeln!(out, "best candidate #{} (max |im| {:.3e}, |x^(n-1)| {:.3e})", d.best, best.max_imag, best.subleading);
            for (t, v) in best.tuples.iter().zip(&best.values) {
                let _ = writeln!(out, "  {:?}  {}", t, cx(*v));
            }
            let coeffs: Vec<String> = best.coeffs.iter().rev().map(|&c| cx(c)).collect();
            let _ = writeln!(out, "  coefficients (descending): {}", coeffs.join(", "));
        }
    }
    out
}

pub fn render_verification(v: &VerificationDocument) -> String {
    let mut out = String::new();
    for c in v.checks.iter().filter(|c| !c.pass) {
        let _ = writeln!(out, "FAIL {}: {}", c.name, c.detail);
    }
    let passed = v.checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(
        out,
        "{} document: {}/{} checks passed at tol {:e} -> {}",
        v.document_kind,
        passed,
        v.checks.len(),
        v.tolerance,
        if v.pass { "verified" } else { "FAILED" }
    );
    out
}
