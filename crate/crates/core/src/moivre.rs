//! de Moivre-form equations
//! `x^n - n t x^(n-2) + n(n-3)/2 t^2 x^(n-4) - ... = alpha`.
//!
//! With `A`, `B` the roots of `z^2 = alpha z - t^n`, every root is
//! `w^k nroot(A) + w^(-k) nroot(B)` for `w = exp(2 pi i / n)`, the two
//! radicals paired so that their product is `t`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::complex::{int, to_complex, ComplexValue, ExactRational};
use crate::poly::Polynomial;
use crate::radical::{nth_root_branch, unity, RadicalExpr};
use crate::resolvent::{
    matching_branch, unity_times, Method, ResolventReport, RootCertificate, CLOSED_FORM_TOL,
};

/// `t` stands for the n-th root of `beta`, so `beta = t^n` and all
/// coefficients stay rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoivreForm {
    pub n: u32,
    pub alpha: ExactRational,
    pub t: ExactRational,
}

impl MoivreForm {
    pub fn new(n: u32, alpha: ExactRational, t: ExactRational) -> Self {
        assert!(n >= 2, "de Moivre forms need n >= 2");
        MoivreForm { n, alpha, t }
    }

    pub fn beta(&self) -> ExactRational {
        num_traits::pow(self.t.clone(), self.n as usize)
    }

    /// `z^2 - alpha z + beta`
    pub fn resolvent(&self) -> Polynomial {
        Polynomial::new(vec![self.beta(), -self.alpha.clone(), int(1)])
    }
}

/// `n/(n-k) * C(n-k, k)`, the magnitude of the `t^k x^(n-2k)` coefficient.
fn moivre_coefficient(n: u32, k: u32) -> ExactRational {
    let n_b = BigInt::from(n);
    let nk = BigInt::from(n - k);
    let c = binomial(nk.clone(), BigInt::from(k));
    ExactRational::new(n_b * c, nk)
}

/// Expands the de Moivre polynomial of `form` (with `alpha` moved to the
/// left-hand side).
pub fn build_moivre_poly(form: &MoivreForm) -> Polynomial {
    let n = form.n;
    let mut coeffs = vec![ExactRational::zero(); n as usize + 1];
    coeffs[n as usize] = ExactRational::one();
    let mut t_pow = ExactRational::one();
    for k in 1..=n / 2 {
        t_pow *= &form.t;
        let mut c = moivre_coefficient(n, k) * &t_pow;
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[(n - 2 * k) as usize] += c;
    }
    coeffs[0] -= &form.alpha;
    Polynomial::new(coeffs)
}

/// Reads `(alpha, t)` back from a monic polynomial and verifies every
/// coefficient. For `n = 2` the pair is not identifiable from `x^2 + c`;
/// the form with `t = 0` is returned.
pub fn detect_moivre(p: &Polynomial) -> Option<MoivreForm> {
    let n = p.degree()?;
    if n < 2 || !p.is_monic() || !p.coeff(n - 1).is_zero() {
        return None;
    }
    let n32 = u32::try_from(n).ok()?;
    let t = if n == 2 {
        ExactRational::zero()
    } else {
        -p.coeff(n - 2) / int(n as i64)
    };
    let unshifted = build_moivre_poly(&MoivreForm::new(n32, ExactRational::zero(), t.clone()));
    let alpha = unshifted.coeff(0) - p.coeff(0);
    let form = MoivreForm::new(n32, alpha, t);
    (build_moivre_poly(&form) == *p).then_some(form)
}

/// All `n` roots of the de Moivre equation, certified against
/// [`build_moivre_poly`].
pub fn solve_moivre(form: &MoivreForm) -> ResolventReport {
    let n = form.n;
    let source = build_moivre_poly(form);
    let resolvent = form.resolvent();
    let beta = form.beta();

    let mut roots = Vec::with_capacity(n as usize);
    let mut radicals = Vec::with_capacity(n as usize);
    let mut diagnostics = Vec::new();

    if beta.is_zero() {
        // z^2 = alpha z: B vanishes and the equation is x^n = alpha.
        diagnostics.push("beta = 0: roots are the n-th roots of alpha".to_string());
        let alpha_c = to_complex(&form.alpha);
        for k in 0..n {
            let e = RadicalExpr::root(n, RadicalExpr::Const(form.alpha.clone()), i64::from(k));
            let v = nth_root_branch(alpha_c, n, k);
            roots.push(RootCertificate::new(&source, Some(e), v, CLOSED_FORM_TOL));
            radicals.push(vec![v, ComplexValue::new(0.0, 0.0)]);
        }
        return ResolventReport {
            method: Method::Moivre,
            source,
            resolvent,
            resolvent_roots: vec![alpha_c, ComplexValue::new(0.0, 0.0)],
            roots,
            radicals,
            diagnostics,
        };
    }

    let half = &form.alpha / int(2);
    let disc = &half * &half - &beta;
    let root_disc = RadicalExpr::sqrt(RadicalExpr::Const(disc));
    let sign = if form.alpha.is_negative() { -1 } else { 1 };
    let a_expr = RadicalExpr::sum(vec![
        RadicalExpr::Const(half.clone()),
        RadicalExpr::scaled(int(sign), root_disc.clone()),
    ]);
    let b_expr = RadicalExpr::sum(vec![
        RadicalExpr::Const(half),
        RadicalExpr::scaled(int(-sign), root_disc),
    ]);
    let a_val = a_expr.eval();
    let b_val = to_complex(&beta) / a_val;

    let root_a = nth_root_branch(a_val, n, 0);
    let companion = to_complex(&form.t) / root_a;
    let b_branch = matching_branch(b_expr.eval(), n, companion);

    for k in 0..n {
        let first = unity(n, i64::from(k)) * root_a;
        let second = unity(n, -i64::from(k)) * companion;
        let e = RadicalExpr::sum(vec![
            unity_times(n, k, RadicalExpr::root(n, a_expr.clone(), 0)),
            unity_times(
                n,
                (n - k) % n,
                RadicalExpr::root(n, b_expr.clone(), i64::from(b_branch)),
            ),
        ]);
        roots.push(RootCertificate::new(&source, Some(e), first + second, CLOSED_FORM_TOL));
        radicals.push(vec![first, second]);
    }
    ResolventReport {
        method: Method::Moivre,
        source,
        resolvent,
        resolvent_roots: vec![a_val, b_val],
        roots,
        radicals,
        diagnostics,
    }
}
