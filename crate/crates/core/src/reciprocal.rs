//! Reciprocal (palindromic) polynomials.
//!
//! A palindromic polynomial of degree `2n` splits into `n` quadratics
//! `y^2 + alpha y + 1`. Substituting `u = y + 1/y` turns `y^(-n) p(y)` into a
//! degree-`n` polynomial through the basis `V_k(u) = y^k + y^(-k)`
//! (`V_0 = 2`, `V_1 = u`, `V_k = u V_(k-1) - V_(k-2)`). Because
//! `y^2 + alpha y + 1 = 0` means `y + 1/y = -alpha`, the u-equation returned
//! here is reflected so that its roots are the `alpha` values themselves.

use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::complex::{int, to_complex, ComplexValue, ExactRational};
use crate::error::{Error, Result};
use crate::oracle::{find_roots_numeric, OracleConfig};
use crate::poly::{mul_complex, Polynomial};
use crate::radical::RadicalExpr;
use crate::resolvent::solve_closed_form;

/// Default bound on the half-degree `n` accepted by the factorizer.
pub const DEFAULT_MAX_N: usize = 16;

/// `V_k(u)` with `V_k(y + 1/y) = y^k + y^(-k)`.
pub fn half_angle_basis(k: usize) -> Polynomial {
    let mut prev = Polynomial::constant(int(2));
    if k == 0 {
        return prev;
    }
    let mut cur = Polynomial::x();
    for _ in 1..k {
        let next = &Polynomial::x() * &cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The degree-`n` polynomial whose roots are the `alpha` coefficients of the
/// quadratic factors of a degree-`2n` palindrome.
#[derive(Clone, Debug, PartialEq)]
pub struct UEquation {
    pub poly: Polynomial,
    pub source: Polynomial,
}

pub fn u_equation(p: &Polynomial) -> Result<UEquation> {
    let deg = match p.degree() {
        Some(d) if d >= 2 => d,
        found => return Err(Error::DegreeTooLow { found, min: 2 }),
    };
    if !p.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(UEquation {
        poly: u_poly(p.coeffs()),
        source: p.clone(),
    })
}

/// `(-1)^n W(-u)` where `W(w) = c_n + sum_k c_(n+k) V_k(w)`.
fn u_poly(coeffs: &[ExactRational]) -> Polynomial {
    let n = (coeffs.len() - 1) / 2;
    let mut w = Polynomial::constant(coeffs[n].clone());
    for k in 1..=n {
        w = w + half_angle_basis(k).scale(&coeffs[n + k]);
    }
    let reflected = w.reflect();
    if n % 2 == 1 {
        -reflected
    } else {
        reflected
    }
}

/// `y^2 + alpha y + 1`
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticFactor {
    pub alpha: ComplexValue,
    /// Set when `alpha` is a verified rational root of the u-equation.
    pub exact: Option<ExactRational>,
    pub closed_form: Option<RadicalExpr>,
}

impl QuadraticFactor {
    /// The two roots of the factor; their product is 1.
    pub fn roots(&self) -> [ComplexValue; 2] {
        let disc = (self.alpha * self.alpha - 4.0).sqrt();
        // larger-magnitude root first, the other from the unit product
        let r1 = if (-self.alpha - disc).norm() > (-self.alpha + disc).norm() {
            (-self.alpha - disc) / 2.0
        } else {
            (-self.alpha + disc) / 2.0
        };
        let r2 = if r1.norm() > 0.0 { r1.inv() } else { (-self.alpha - disc) / 2.0 };
        [r1, r2]
    }

    pub fn complex_coeffs(&self) -> Vec<ComplexValue> {
        vec![ComplexValue::new(1.0, 0.0), self.alpha, ComplexValue::new(1.0, 0.0)]
    }

    pub fn exact_poly(&self) -> Option<Polynomial> {
        self.exact
            .as_ref()
            .map(|a| Polynomial::new(vec![int(1), a.clone(), int(1)]))
    }
}

#[derive(Clone, Debug)]
pub struct ReciprocalFactorization {
    pub source: Polynomial,
    /// Number of `(y + 1)` factors divided out before the even-degree split.
    pub unit_factors: usize,
    pub u_equation: UEquation,
    pub factors: Vec<QuadraticFactor>,
    /// Whether the alpha values came from closed forms (`n <= 4`).
    pub closed_form: bool,
}

impl ReciprocalFactorization {
    /// Numeric product of all factors, ascending coefficients.
    pub fn recombine(&self) -> Vec<ComplexValue> {
        let mut acc = vec![ComplexValue::new(1.0, 0.0)];
        for _ in 0..self.unit_factors {
            acc = mul_complex(&acc, &[ComplexValue::new(1.0, 0.0), ComplexValue::new(1.0, 0.0)]);
        }
        for f in &self.factors {
            acc = mul_complex(&acc, &f.complex_coeffs());
        }
        acc
    }

    /// Exact product, available when every alpha is a known rational.
    pub fn recombine_exact(&self) -> Option<Polynomial> {
        let mut acc = Polynomial::one();
        for _ in 0..self.unit_factors {
            acc = acc * Polynomial::from_ints(&[1, 1]);
        }
        for f in &self.factors {
            acc = acc * f.exact_poly()?;
        }
        Some(acc)
    }

    /// All roots of the source: `-1` for each unit factor, then the root
    /// pairs of each quadratic.
    pub fn roots(&self) -> Vec<ComplexValue> {
        let mut out = vec![ComplexValue::new(-1.0, 0.0); self.unit_factors];
        for f in &self.factors {
            out.extend(f.roots());
        }
        out
    }
}

/// Splits a monic palindrome into `(y + 1)` factors and quadratics
/// `y^2 + alpha y + 1`. Odd degree: one `(y + 1)` is divided out first.
pub fn factor_reciprocal(p: &Polynomial, max_n: usize) -> Result<ReciprocalFactorization> {
    let deg = match p.degree() {
        Some(d) if d >= 1 => d,
        found => return Err(Error::DegreeTooLow { found, min: 1 }),
    };
    if !p.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut even = p.clone();
    let mut unit_factors = 0;
    if deg % 2 == 1 {
        let (q, r) = even.divmod(&Polynomial::from_ints(&[1, 1]))?;
        debug_assert!(r.is_zero(), "odd palindromes vanish at -1");
        even = q;
        unit_factors += 1;
    }
    let n = even.degree().unwrap_or(0) / 2;
    if n > max_n {
        return Err(Error::SizeBound { n, max: max_n });
    }
    if n == 0 {
        return Ok(ReciprocalFactorization {
            source: p.clone(),
            unit_factors,
            u_equation: UEquation {
                poly: Polynomial::one(),
                source: even,
            },
            factors: Vec::new(),
            closed_form: true,
        });
    }
    let u_eq = UEquation {
        poly: u_poly(even.coeffs()),
        source: even,
    };
    let (alphas, closed, used_closed_form) = alpha_values(&u_eq.poly)?;
    let factors = alphas
        .into_iter()
        .zip(closed)
        .map(|(alpha, closed_form)| {
            let exact = exact_root(&u_eq.poly, alpha);
            QuadraticFactor {
                alpha: exact.as_ref().map(to_complex).unwrap_or(alpha),
                exact,
                closed_form,
            }
        })
        .collect();
    Ok(ReciprocalFactorization {
        source: p.clone(),
        unit_factors,
        u_equation: u_eq,
        factors,
        closed_form: used_closed_form,
    })
}

type AlphaValues = (Vec<ComplexValue>, Vec<Option<RadicalExpr>>, bool);

/// Roots of the u-equation: closed forms up to degree 4, the oracle above.
fn alpha_values(u: &Polynomial) -> Result<AlphaValues> {
    let n = u.degree().unwrap_or(0);
    if n <= 4 {
        let report = solve_closed_form(u)?;
        if report.all_certified() {
            let (vals, exprs) = report
                .roots
                .into_iter()
                .map(|r| (r.numeric, r.closed_form))
                .unzip();
            return Ok((vals, exprs, true));
        }
    }
    let vals = find_roots_numeric(u, &OracleConfig::default())?;
    let exprs = vec![None; vals.len()];
    Ok((vals, exprs, false))
}

/// Snaps a numeric root to a rational when substitution confirms it.
fn exact_root(u: &Polynomial, alpha: ComplexValue) -> Option<ExactRational> {
    if alpha.im.abs() > 1e-6 * alpha.norm().max(1.0) {
        return None;
    }
    let den = u
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let den_f = den.to_f64()?;
    if den_f > 1e12 {
        return None;
    }
    let scaled = (alpha.re * den_f).round();
    if !scaled.is_finite() || scaled.abs() > 9e15 {
        return None;
    }
    let candidate = ExactRational::new(BigInt::from(scaled as i64), den);
    u.eval_exact(&candidate).is_zero().then_some(candidate)
}

/// The u-equation of `y^(2n) + p y^n + 1`: `V_n(u) + (-1)^n p`.
pub fn trinomial_u_equation(n: usize, p: &ExactRational) -> Polynomial {
    assert!(n >= 1, "trinomial needs n >= 1");
    let constant = if n % 2 == 0 { p.clone() } else { -p.clone() };
    half_angle_basis(n) + Polynomial::constant(constant)
}

/// `y^(2n) + p y^n + 1`
pub fn trinomial(n: usize, p: &ExactRational) -> Polynomial {
    let mut coeffs = vec![ExactRational::zero(); 2 * n + 1];
    coeffs[0] = int(1);
    coeffs[2 * n] = int(1);
    coeffs[n] += p;
    Polynomial::new(coeffs)
}

/// `alpha_k = -2 cos((phi + 2 pi k) / n)` with `cos(phi) = -p/2`; `phi` is
/// complex when `|p| > 2`.
pub fn arc_division_alphas(n: usize, p: &ExactRational) -> Vec<ComplexValue> {
    assert!(n >= 1, "arc division needs n >= 1");
    let phi = arc_phi(p);
    (0..n)
        .map(|k| {
            let theta = (phi + 2.0 * std::f64::consts::PI * k as f64) / n as f64;
            -2.0 * theta.cos()
        })
        .collect()
}

fn arc_phi(p: &ExactRational) -> ComplexValue {
    (-to_complex(p) / 2.0).acos()
}

/// `(lin_coeff * y + const_coeff) / (y^2 + alpha y + 1)`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartialFractionTerm {
    pub alpha: ComplexValue,
    pub lin_coeff: ComplexValue,
    pub const_coeff: ComplexValue,
}

impl PartialFractionTerm {
    pub fn eval(&self, y: ComplexValue) -> ComplexValue {
        (self.lin_coeff * y + self.const_coeff) / (y * y + self.alpha * y + 1.0)
    }
}

/// Separation below which two alpha values count as one repeated factor.
const REPEAT_TOL: f64 = 1e-8;

/// Partial fractions of `1 / (y^(2n) + p y^n + 1)` over its quadratic
/// factors, by residues at each factor's roots.
pub fn partial_fractions(n: usize, p: &ExactRational) -> Result<Vec<PartialFractionTerm>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let alphas = arc_division_alphas(n, p);
    for (i, &a) in alphas.iter().enumerate() {
        if (a * a - 4.0).norm() < REPEAT_TOL {
            // a double root y = -+1 inside the factor itself
            return Err(Error::RepeatedFactor(a, a));
        }
        for &b in &alphas[i + 1..] {
            if (a - b).norm() < REPEAT_TOL {
                return Err(Error::RepeatedFactor(a, b));
            }
        }
    }
    // With cos(phi) = -p/2 and theta_k = (phi + 2 pi k)/n the residues
    // collapse to c_k = sin(theta_k - phi) / (n sin(phi)), d_k = 1/n.
    let phi = arc_phi(p);
    let nf = n as f64;
    let n_sin_phi = nf * phi.sin();
    Ok(alphas
        .into_iter()
        .enumerate()
        .map(|(k, alpha)| {
            let theta = (phi + 2.0 * std::f64::consts::PI * k as f64) / nf;
            PartialFractionTerm {
                alpha,
                lin_coeff: (theta - phi).sin() / n_sin_phi,
                const_coeff: ComplexValue::new(1.0 / nf, 0.0),
            }
        })
        .collect())
}

/// The inverse-function part of `integral (c y + d)/(y^2 + alpha y + 1) dy`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InversePart {
    /// `amplitude * atan((2y + alpha) / sqrt_disc)`, `sqrt_disc = sqrt(4 - alpha^2)`
    Circular {
        amplitude: ComplexValue,
        sqrt_disc: ComplexValue,
    },
    /// `amplitude * ln((2y + alpha - sqrt_disc) / (2y + alpha + sqrt_disc))`,
    /// `sqrt_disc = sqrt(alpha^2 - 4)`
    Hyperbolic {
        amplitude: ComplexValue,
        sqrt_disc: ComplexValue,
    },
}

/// Parameters of the antiderivative of one partial-fraction term:
/// `log_coeff * ln(y^2 + alpha y + 1)` plus the inverse part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AntiderivativeTerm {
    pub alpha: ComplexValue,
    pub log_coeff: ComplexValue,
    pub inverse: InversePart,
}

impl AntiderivativeTerm {
    /// Value of the described antiderivative at `y` (principal branches).
    pub fn eval(&self, y: ComplexValue) -> ComplexValue {
        let quad = y * y + self.alpha * y + 1.0;
        let arg = 2.0 * y + self.alpha;
        let inv = match self.inverse {
            InversePart::Circular {
                amplitude,
                sqrt_disc,
            } => amplitude * (arg / sqrt_disc).atan(),
            InversePart::Hyperbolic {
                amplitude,
                sqrt_disc,
            } => amplitude * ((arg - sqrt_disc) / (arg + sqrt_disc)).ln(),
        };
        self.log_coeff * quad.ln() + inv
    }
}

const REAL_TOL: f64 = 1e-12;

pub fn antiderivative_terms(terms: &[PartialFractionTerm]) -> Result<Vec<AntiderivativeTerm>> {
    terms
        .iter()
        .map(|t| {
            let alpha = t.alpha;
            let disc = alpha * alpha - 4.0;
            if disc.norm() < REAL_TOL * 4.0 {
                return Err(Error::BoundaryAlpha(alpha));
            }
            let numer = 2.0 * t.const_coeff - t.lin_coeff * alpha;
            let real_alpha = alpha.im.abs() <= REAL_TOL * alpha.norm().max(1.0);
            let inverse = if real_alpha && alpha.re.abs() < 2.0 {
                let s = ComplexValue::new(4.0 - alpha.re * alpha.re, 0.0).sqrt();
                InversePart::Circular {
                    amplitude: numer / s,
                    sqrt_disc: s,
                }
            } else {
                let h = disc.sqrt();
                InversePart::Hyperbolic {
                    amplitude: numer / (2.0 * h),
                    sqrt_disc: h,
                }
            };
            Ok(AntiderivativeTerm {
                alpha,
                log_coeff: t.lin_coeff / 2.0,
                inverse,
            })
        })
        .collect()
}
