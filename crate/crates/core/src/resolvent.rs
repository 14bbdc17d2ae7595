//! Resolvent constructions for quadratic, cubic and quartic equations.
//!
//! Depressed equations are written in the solved orientation
//! `x^3 = a x + b` and `x^4 = a x^2 + b x + c`. A cubic root is
//! `cbrt(A) + cbrt(B)` where `A`, `B` solve `z^2 = b z - a^3/27`; a quartic
//! root is `sqrt(A) + sqrt(B) + sqrt(C)` where `A`, `B`, `C` solve
//! `z^3 = (a/2) z^2 - ((4c + a^2)/16) z + b^2/64`. In both cases the
//! radicals are paired so that their product is fixed (`a/3` and `b/8`
//! respectively); the companion radical is derived from the principal one
//! rather than searched for.

use num_traits::{Signed, Zero};

use crate::complex::{int, to_complex, ComplexValue, ExactRational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::radical::{exact_unity_root, nth_root_branch, unity, RadicalExpr};

/// Relative residual bound for cubic and quartic closed forms.
pub const CLOSED_FORM_TOL: f64 = 1e-9;
/// Relative residual bound for linear and quadratic closed forms.
pub const QUADRATIC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Linear,
    Quadratic,
    CubicResolvent,
    QuarticResolvent,
    QuarticSquaredResolvent,
    Moivre,
    Reciprocal,
    Numeric,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Linear => "linear",
            Method::Quadratic => "quadratic",
            Method::CubicResolvent => "cubic-resolvent",
            Method::QuarticResolvent => "quartic-resolvent",
            Method::QuarticSquaredResolvent => "quartic-squared-resolvent",
            Method::Moivre => "moivre",
            Method::Reciprocal => "reciprocal",
            Method::Numeric => "numeric",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Method> {
        [
            Method::Linear,
            Method::Quadratic,
            Method::CubicResolvent,
            Method::QuarticResolvent,
            Method::QuarticSquaredResolvent,
            Method::Moivre,
            Method::Reciprocal,
            Method::Numeric,
        ]
        .into_iter()
        .find(|m| m.tag() == tag)
    }
}

/// A closed form paired with its value and its residual against the source
/// polynomial.
#[derive(Clone, Debug)]
pub struct RootCertificate {
    /// `None` when the root was only found numerically.
    pub closed_form: Option<RadicalExpr>,
    pub numeric: ComplexValue,
    /// `|p(numeric)|`
    pub residual: f64,
    /// Residual scale of the source at `numeric`.
    pub scale: f64,
    /// Relative tolerance declared by the producing operation.
    pub tolerance: f64,
}

impl RootCertificate {
    pub fn new(
        source: &Polynomial,
        closed_form: Option<RadicalExpr>,
        numeric: ComplexValue,
        tolerance: f64,
    ) -> Self {
        RootCertificate {
            closed_form,
            numeric,
            residual: source.eval(numeric).norm(),
            scale: source.residual_scale(numeric),
            tolerance,
        }
    }

    pub fn relative_residual(&self) -> f64 {
        self.residual / self.scale
    }

    pub fn is_certified(&self) -> bool {
        self.residual <= self.tolerance * self.scale
    }
}

#[derive(Clone, Debug)]
pub struct ResolventReport {
    pub method: Method,
    pub source: Polynomial,
    pub resolvent: Polynomial,
    pub resolvent_roots: Vec<ComplexValue>,
    pub roots: Vec<RootCertificate>,
    /// Per root, the radical values whose sum is the root (cube roots for
    /// cubics, square roots for quartics).
    pub radicals: Vec<Vec<ComplexValue>>,
    pub diagnostics: Vec<String>,
}

impl ResolventReport {
    pub fn numeric_roots(&self) -> Vec<ComplexValue> {
        self.roots.iter().map(|r| r.numeric).collect()
    }

    pub fn all_certified(&self) -> bool {
        self.roots.iter().all(RootCertificate::is_certified)
    }

    pub fn max_relative_residual(&self) -> f64 {
        self.roots
            .iter()
            .map(RootCertificate::relative_residual)
            .fold(0.0, f64::max)
    }

    /// Replaces the declared tolerance of every certificate.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        for r in &mut self.roots {
            r.tolerance = tolerance;
        }
        self
    }
}

fn sum_expr(terms: Vec<RadicalExpr>) -> RadicalExpr {
    RadicalExpr::sum(terms)
}

fn shifted(expr: RadicalExpr, shift: &ExactRational) -> RadicalExpr {
    if shift.is_zero() {
        expr
    } else {
        sum_expr(vec![expr, RadicalExpr::Const(shift.clone())])
    }
}

/// Branch `k` of the n-th root of `radicand` closest to `target`.
pub(crate) fn matching_branch(radicand: ComplexValue, n: u32, target: ComplexValue) -> u32 {
    (0..n)
        .min_by(|&i, &j| {
            let di = (nth_root_branch(radicand, n, i) - target).norm();
            let dj = (nth_root_branch(radicand, n, j) - target).norm();
            di.total_cmp(&dj)
        })
        .unwrap_or(0)
}

/// `x^3 - a x - b`, the polynomial form of `x^3 = a x + b`.
pub fn depressed_cubic(a: &ExactRational, b: &ExactRational) -> Polynomial {
    Polynomial::new(vec![-b.clone(), -a.clone(), int(0), int(1)])
}

pub fn depressed_quartic(a: &ExactRational, b: &ExactRational, c: &ExactRational) -> Polynomial {
    Polynomial::new(vec![-c.clone(), -b.clone(), -a.clone(), int(0), int(1)])
}

/// `z^2 - b z + a^3/27`, the resolvent of `x^3 = a x + b`.
pub fn resolvent_of_cubic(a: &ExactRational, b: &ExactRational) -> Polynomial {
    Polynomial::new(vec![a * a * a / int(27), -b.clone(), int(1)])
}

/// `z^3 - (a/2) z^2 + ((4c + a^2)/16) z - b^2/64`, the resolvent of
/// `x^4 = a x^2 + b x + c`.
pub fn resolvent_of_quartic(a: &ExactRational, b: &ExactRational, c: &ExactRational) -> Polynomial {
    Polynomial::new(vec![
        -(b * b) / int(64),
        (int(4) * c + a * a) / int(16),
        -a / int(2),
        int(1),
    ])
}

/// The t-equation whose roots are the squares of the quartic resolvent's
/// roots:
/// `t^3 - (a^2/8 - c/2) t^2 + (a^4/256 + a^2 c/32 + c^2/16 - a b^2/64) t - b^4/4096`.
pub fn squared_resolvent(a: &ExactRational, b: &ExactRational, c: &ExactRational) -> Polynomial {
    let a2 = a * a;
    let b2 = b * b;
    let alpha = &a2 / int(8) - c / int(2);
    let beta = &a2 * &a2 / int(256) + &a2 * c / int(32) + c * c / int(16) - a * &b2 / int(64);
    let gamma = &b2 * &b2 / int(4096);
    Polynomial::new(vec![-gamma, beta, -alpha, int(1)])
}

/// Solves `x^3 = a x + b` through its quadratic resolvent.
pub fn solve_cubic(a: &ExactRational, b: &ExactRational) -> ResolventReport {
    let source = depressed_cubic(a, b);
    let resolvent = resolvent_of_cubic(a, b);

    // A takes the larger-magnitude root of the resolvent; B = a^3/27 / A.
    let (a_expr, b_expr) = if a.is_zero() {
        (RadicalExpr::Const(b.clone()), RadicalExpr::int(0))
    } else {
        let half_b = b / int(2);
        let disc = &half_b * &half_b - a * a * a / int(27);
        let root_disc = RadicalExpr::sqrt(RadicalExpr::Const(disc));
        let sign = if b.is_negative() { -1 } else { 1 };
        (
            sum_expr(vec![
                RadicalExpr::Const(half_b.clone()),
                RadicalExpr::scaled(int(sign), root_disc.clone()),
            ]),
            sum_expr(vec![
                RadicalExpr::Const(half_b),
                RadicalExpr::scaled(int(-sign), root_disc),
            ]),
        )
    };
    let a_val = a_expr.eval();
    let b_val = if a.is_zero() {
        ComplexValue::new(0.0, 0.0)
    } else {
        // Product of the resolvent roots is a^3/27.
        let product = to_complex(&(a * a * a / int(27)));
        if a_val.norm() > 0.0 {
            product / a_val
        } else {
            b_expr.eval()
        }
    };

    let cbrt_a = nth_root_branch(a_val, 3, 0);
    let companion = if cbrt_a.norm() > 0.0 {
        to_complex(&(a / int(3))) / cbrt_a
    } else {
        ComplexValue::new(0.0, 0.0)
    };
    let companion_branch = matching_branch(b_expr.eval(), 3, companion);

    let mut roots = Vec::with_capacity(3);
    let mut radicals = Vec::with_capacity(3);
    for k in 0..3u32 {
        let mu = unity(3, i64::from(k));
        let nu = unity(3, -i64::from(k));
        let first = mu * cbrt_a;
        let second = nu * companion;
        let mut terms = vec![unity_times(3, k, RadicalExpr::root(3, a_expr.clone(), 0))];
        if !a.is_zero() {
            terms.push(unity_times(
                3,
                (3 - k) % 3,
                RadicalExpr::root(3, b_expr.clone(), i64::from(companion_branch)),
            ));
        }
        roots.push(RootCertificate::new(
            &source,
            Some(sum_expr(terms)),
            first + second,
            CLOSED_FORM_TOL,
        ));
        radicals.push(vec![first, second]);
    }

    let mut diagnostics = Vec::new();
    if a.is_zero() {
        diagnostics.push("a = 0: roots are the cube roots of b".to_string());
    }
    ResolventReport {
        method: Method::CubicResolvent,
        source,
        resolvent,
        resolvent_roots: vec![a_val, b_val],
        roots,
        radicals,
        diagnostics,
    }
}

/// `mu_k * e` with `mu_k` the exact k-th n-th root of unity.
pub(crate) fn unity_times(n: u32, k: u32, e: RadicalExpr) -> RadicalExpr {
    if k % n == 0 {
        return e;
    }
    match exact_unity_root(n, k) {
        Some(mu) => RadicalExpr::product(vec![mu, e]),
        None => match e {
            RadicalExpr::Root {
                index,
                radicand,
                branch,
            } if index == n => RadicalExpr::Root {
                index,
                radicand,
                branch: (branch + k) % n,
            },
            other => RadicalExpr::product(vec![RadicalExpr::root(n, RadicalExpr::int(1), i64::from(k)), other]),
        },
    }
}

/// Roots of a monic cubic with closed forms, via its depressed form.
fn cubic_roots_exact(p: &Polynomial) -> (Vec<RadicalExpr>, Vec<ComplexValue>) {
    let (q, shift) = p.depress().expect("cubic");
    let report = solve_cubic(&-q.coeff(1), &-q.coeff(0));
    let shift_c = to_complex(&shift);
    report
        .roots
        .into_iter()
        .map(|r| {
            (
                shifted(r.closed_form.expect("closed form"), &shift),
                r.numeric + shift_c,
            )
        })
        .unzip()
}

/// Solves `x^4 = a x^2 + b x + c` through its cubic resolvent.
pub fn solve_quartic(a: &ExactRational, b: &ExactRational, c: &ExactRational) -> ResolventReport {
    let source = depressed_quartic(a, b, c);
    let resolvent = resolvent_of_quartic(a, b, c);
    let (res_exprs, res_vals) = cubic_roots_exact(&resolvent);

    if b.is_zero() {
        return biquadratic(a, c, source, resolvent, res_vals);
    }

    // Principal square roots on the two largest resolvent roots; the third
    // is fixed by sqrt(A) sqrt(B) sqrt(C) = b/8.
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&i, &j| res_vals[j].norm().total_cmp(&res_vals[i].norm()));
    let (ia, ib, ic) = (order[0], order[1], order[2]);
    let sa = nth_root_branch(res_vals[ia], 2, 0);
    let sb = nth_root_branch(res_vals[ib], 2, 0);
    let denom = sa * sb;
    assert!(
        denom.norm() > 0.0,
        "resolvent roots cannot vanish when b != 0"
    );
    let sc = to_complex(&(b / int(8))) / denom;
    // Branches are matched against the trees' own values: a real negative
    // radicand can evaluate with either sign of a zero imaginary part.
    let square_root = |i: usize, target: ComplexValue| {
        let k = matching_branch(res_exprs[i].eval(), 2, target);
        RadicalExpr::root(2, res_exprs[i].clone(), i64::from(k))
    };
    let ea = square_root(ia, sa);
    let eb = square_root(ib, sb);
    let ec = square_root(ic, sc);

    let patterns: [(f64, f64, f64); 4] = [
        (1.0, 1.0, 1.0),
        (1.0, -1.0, -1.0),
        (-1.0, 1.0, -1.0),
        (-1.0, -1.0, 1.0),
    ];
    let mut roots = Vec::with_capacity(4);
    let mut radicals = Vec::with_capacity(4);
    for (s1, s2, s3) in patterns {
        let terms = vec![
            signed(s1, ea.clone()),
            signed(s2, eb.clone()),
            signed(s3, ec.clone()),
        ];
        let vals = vec![sa * s1, sb * s2, sc * s3];
        let value = vals.iter().sum();
        roots.push(RootCertificate::new(
            &source,
            Some(sum_expr(terms)),
            value,
            CLOSED_FORM_TOL,
        ));
        radicals.push(vals);
    }
    ResolventReport {
        method: Method::QuarticResolvent,
        source,
        resolvent,
        resolvent_roots: res_vals,
        roots,
        radicals,
        diagnostics: Vec::new(),
    }
}

fn signed(sign: f64, e: RadicalExpr) -> RadicalExpr {
    if sign < 0.0 {
        RadicalExpr::neg(e)
    } else {
        e
    }
}

/// `b = 0`: the pairing constraint degenerates, so solve the quadratic in
/// `x^2` directly.
fn biquadratic(
    a: &ExactRational,
    c: &ExactRational,
    source: Polynomial,
    resolvent: Polynomial,
    resolvent_roots: Vec<ComplexValue>,
) -> ResolventReport {
    let half_a = a / int(2);
    let disc = &half_a * &half_a + c;
    let root_disc = RadicalExpr::sqrt(RadicalExpr::Const(disc));
    let y1 = sum_expr(vec![RadicalExpr::Const(half_a.clone()), root_disc.clone()]);
    let y2 = sum_expr(vec![RadicalExpr::Const(half_a), RadicalExpr::neg(root_disc)]);
    let mut roots = Vec::with_capacity(4);
    let mut radicals = Vec::with_capacity(4);
    for y in [y1, y2] {
        for branch in 0..2 {
            let e = RadicalExpr::root(2, y.clone(), branch);
            let v = e.eval();
            roots.push(RootCertificate::new(&source, Some(e), v, CLOSED_FORM_TOL));
            radicals.push(vec![v]);
        }
    }
    ResolventReport {
        method: Method::QuarticResolvent,
        source,
        resolvent,
        resolvent_roots,
        roots,
        radicals,
        diagnostics: vec!["b = 0: biquadratic fallback (quadratic in x^2)".to_string()],
    }
}

/// Solves `x^4 = a x^2 + b x + c` through the t-equation: each root is a
/// sum of fourth roots of the t-equation's roots `E`, `F`, `G`.
pub fn solve_quartic_squared(a: &ExactRational, b: &ExactRational, c: &ExactRational) -> ResolventReport {
    if b.is_zero() {
        let mut report = solve_quartic(a, b, c);
        report.method = Method::QuarticSquaredResolvent;
        report.resolvent = squared_resolvent(a, b, c);
        report.resolvent_roots = report.resolvent_roots.iter().map(|z| z * z).collect();
        return report;
    }
    let source = depressed_quartic(a, b, c);
    let resolvent = squared_resolvent(a, b, c);
    let (exprs, vals) = cubic_roots_exact(&resolvent);

    // Recover the z-roots A = +-sqrt(E) etc. from the sum constraint
    // A + B + C = a/2.
    let half_a = to_complex(&(a / int(2)));
    let roots_e: Vec<ComplexValue> = vals.iter().map(|&e| nth_root_branch(e, 2, 0)).collect();
    let mut best = (f64::INFINITY, [1.0, 1.0, 1.0]);
    for mask in 0..8u32 {
        let signs = [0, 1, 2].map(|i| if mask >> i & 1 == 1 { -1.0 } else { 1.0 });
        let s: ComplexValue = (0..3).map(|i| roots_e[i] * signs[i]).sum();
        let d = (s - half_a).norm();
        if d < best.0 {
            best = (d, signs);
        }
    }
    let z_roots: Vec<ComplexValue> = (0..3).map(|i| roots_e[i] * best.1[i]).collect();

    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&i, &j| z_roots[j].norm().total_cmp(&z_roots[i].norm()));
    let (ia, ib, ic) = (order[0], order[1], order[2]);
    let sa = nth_root_branch(z_roots[ia], 2, 0);
    let sb = nth_root_branch(z_roots[ib], 2, 0);
    let sc = to_complex(&(b / int(8))) / (sa * sb);
    let fourth = |i: usize, target: ComplexValue| {
        let k = matching_branch(exprs[i].eval(), 4, target);
        RadicalExpr::root(4, exprs[i].clone(), i64::from(k))
    };
    let ea = fourth(ia, sa);
    let eb = fourth(ib, sb);
    let ec = fourth(ic, sc);

    let patterns: [(f64, f64, f64); 4] = [
        (1.0, 1.0, 1.0),
        (1.0, -1.0, -1.0),
        (-1.0, 1.0, -1.0),
        (-1.0, -1.0, 1.0),
    ];
    let mut roots = Vec::with_capacity(4);
    let mut radicals = Vec::with_capacity(4);
    for (s1, s2, s3) in patterns {
        let vals = vec![sa * s1, sb * s2, sc * s3];
        roots.push(RootCertificate::new(
            &source,
            Some(sum_expr(vec![
                signed(s1, ea.clone()),
                signed(s2, eb.clone()),
                signed(s3, ec.clone()),
            ])),
            vals.iter().sum(),
            CLOSED_FORM_TOL,
        ));
        radicals.push(vals);
    }
    ResolventReport {
        method: Method::QuarticSquaredResolvent,
        source,
        resolvent,
        resolvent_roots: vals,
        roots,
        radicals,
        diagnostics: Vec::new(),
    }
}

/// Solves a quadratic: the depressed form `x^2 = a` has resolvent `z = a`
/// and roots `+-sqrt(a)`; general quadratics are depressed first.
pub fn solve_quadratic(p: &Polynomial) -> Result<ResolventReport> {
    if p.degree() != Some(2) {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: p.degree(),
        });
    }
    let (q, shift) = p.depress()?;
    let a = -q.coeff(0);
    let resolvent = Polynomial::new(vec![-a.clone(), int(1)]);
    let shift_c = to_complex(&shift);
    let mut roots = Vec::with_capacity(2);
    let mut radicals = Vec::with_capacity(2);
    for branch in 0..2 {
        let e = RadicalExpr::root(2, RadicalExpr::Const(a.clone()), branch);
        let v = e.eval();
        roots.push(RootCertificate::new(
            p,
            Some(shifted(e, &shift)),
            v + shift_c,
            QUADRATIC_TOL,
        ));
        radicals.push(vec![v]);
    }
    Ok(ResolventReport {
        method: Method::Quadratic,
        source: p.clone(),
        resolvent,
        resolvent_roots: vec![to_complex(&a)],
        roots,
        radicals,
        diagnostics: Vec::new(),
    })
}

/// Re-expresses a report on the depressed polynomial in terms of the
/// original one: every root moves by `shift` and is recertified.
fn lift(report: ResolventReport, original: &Polynomial, shift: &ExactRational) -> ResolventReport {
    let shift_c = to_complex(shift);
    let roots = report
        .roots
        .into_iter()
        .map(|r| {
            RootCertificate::new(
                original,
                r.closed_form.map(|e| shifted(e, shift)),
                r.numeric + shift_c,
                r.tolerance,
            )
        })
        .collect();
    ResolventReport {
        source: original.clone(),
        roots,
        ..report
    }
}

/// Full certified root set of a polynomial of degree 1 to 4.
pub fn solve_closed_form(p: &Polynomial) -> Result<ResolventReport> {
    match p.degree() {
        None | Some(0) => Err(Error::DegreeTooLow {
            found: p.degree(),
            min: 1,
        }),
        Some(1) => {
            let root = -p.coeff(0) / p.coeff(1);
            let value = to_complex(&root);
            Ok(ResolventReport {
                method: Method::Linear,
                source: p.clone(),
                resolvent: Polynomial::one(),
                resolvent_roots: Vec::new(),
                roots: vec![RootCertificate::new(
                    p,
                    Some(RadicalExpr::Const(root)),
                    value,
                    QUADRATIC_TOL,
                )],
                radicals: vec![vec![value]],
                diagnostics: Vec::new(),
            })
        }
        Some(2) => solve_quadratic(p),
        Some(3) => {
            let (q, shift) = p.depress()?;
            Ok(lift(solve_cubic(&-q.coeff(1), &-q.coeff(0)), p, &shift))
        }
        Some(4) => {
            let (q, shift) = p.depress()?;
            Ok(lift(
                solve_quartic(&-q.coeff(2), &-q.coeff(1), &-q.coeff(0)),
                p,
                &shift,
            ))
        }
        Some(n) => Err(Error::DegreeUnsupported(n)),
    }
}

/// Same as [`solve_closed_form`] but quartics go through the t-equation.
pub fn solve_closed_form_squared(p: &Polynomial) -> Result<ResolventReport> {
    if p.degree() == Some(4) {
        let (q, shift) = p.depress()?;
        return Ok(lift(
            solve_quartic_squared(&-q.coeff(2), &-q.coeff(1), &-q.coeff(0)),
            p,
            &shift,
        ));
    }
    solve_closed_form(p)
}

/// Resolvent of the depressed form of `p` (degree 2, 3 or 4). With
/// `squared`, quartics yield the t-equation.
pub fn resolvent_of(p: &Polynomial, squared: bool) -> Result<(Polynomial, ExactRational)> {
    let (q, shift) = p.depress()?;
    let r = match q.degree() {
        Some(2) => Polynomial::new(vec![q.coeff(0), int(1)]),
        Some(3) => resolvent_of_cubic(&-q.coeff(1), &-q.coeff(0)),
        Some(4) => {
            let (a, b, c) = (-q.coeff(2), -q.coeff(1), -q.coeff(0));
            if squared {
                squared_resolvent(&a, &b, &c)
            } else {
                resolvent_of_quartic(&a, &b, &c)
            }
        }
        Some(n) => return Err(Error::DegreeUnsupported(n)),
        None => unreachable!("depress rejects the zero polynomial"),
    };
    Ok((r, shift))
}
