//! Power sums of radicals of resolvent roots, the identities they obey,
//! the quartic elimination, and the numeric quintic explorer.
//!
//! For radicals `a, b, c` (n-th roots of `A, B, C`) write
//! `x = a + b + c`, `p = ab + ac + bc`, `g = abc`. Then
//! `R_m = a^m + b^m + c^m` and `S_m = (ab)^m + (ac)^m + (bc)^m` follow
//! three-term recurrences in `(x, p, g)`.

use num_traits::Zero;

use crate::complex::{int, ComplexValue, ExactRational};
use crate::exec::{map_range, Execution};
use crate::poly::{expand_roots, Polynomial};
use crate::radical::{nth_root_branch, unity};
use crate::resolvent::squared_resolvent;

/// `s_m = u^m + v^m` from `x = u + v`, `t = u v`:
/// `s_0 = 2`, `s_1 = x`, `s_m = x s_(m-1) - t s_(m-2)`.
pub fn two_term_sum(x: ComplexValue, t: ComplexValue, m: usize) -> ComplexValue {
    let mut prev = ComplexValue::new(2.0, 0.0);
    if m == 0 {
        return prev;
    }
    let mut cur = x;
    for _ in 1..m {
        let next = x * cur - t * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact-coefficient version of [`two_term_sum`]: the polynomial in `x`
/// (with `t` rational) equal to `u^m + v^m`.
pub fn two_term_sum_poly(t: &ExactRational, m: usize) -> Polynomial {
    let mut prev = Polynomial::constant(int(2));
    if m == 0 {
        return prev;
    }
    let mut cur = Polynomial::x();
    for _ in 1..m {
        let next = &Polynomial::x() * &cur - prev.scale(t);
        prev = cur;
        cur = next;
    }
    cur
}

/// `(x, p, g)` built from concrete radicals of `A, B, C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripleSumState {
    pub x: ComplexValue,
    pub p: ComplexValue,
    pub g: ComplexValue,
    /// The radicals `a, b, c` the sums were built from.
    pub radicals: [ComplexValue; 3],
}

impl TripleSumState {
    /// Radicals are branch `branches[i]` of the n-th root of each value.
    pub fn new(values: [ComplexValue; 3], n: u32, branches: [u32; 3]) -> Self {
        let r = [0, 1, 2].map(|i| nth_root_branch(values[i], n, branches[i]));
        Self::from_radicals(r)
    }

    pub fn from_radicals(r: [ComplexValue; 3]) -> Self {
        TripleSumState {
            x: r[0] + r[1] + r[2],
            p: r[0] * r[1] + r[0] * r[2] + r[1] * r[2],
            g: r[0] * r[1] * r[2],
            radicals: r,
        }
    }
}

/// `(R_m, S_m)` by the recurrences
/// `R_m = x R_(m-1) - p R_(m-2) + g R_(m-3)` and
/// `S_m = p S_(m-1) - x g S_(m-2) + g^2 S_(m-3)`.
pub fn triple_sums(state: &TripleSumState, m: usize) -> (ComplexValue, ComplexValue) {
    let TripleSumState { x, p, g, .. } = *state;
    let three = ComplexValue::new(3.0, 0.0);
    let r_base = [three, x, x * x - 2.0 * p];
    let s_base = [three, p, p * p - 2.0 * x * g];
    if m < 3 {
        return (r_base[m], s_base[m]);
    }
    let (mut r, mut s) = (r_base, s_base);
    for _ in 3..=m {
        let r_next = x * r[2] - p * r[1] + g * r[0];
        let s_next = p * s[2] - x * g * s[1] + g * g * s[0];
        r = [r[1], r[2], r_next];
        s = [s[1], s[2], s_next];
    }
    (r[2], s[2])
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// Value from the recurrence at `2m` or `3m`.
    pub recurrence: ComplexValue,
    /// Value from the identity in `R_m`, `S_m`, `g^m`.
    pub identity: ComplexValue,
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub m: usize,
    pub checks: Vec<IdentityCheck>,
    pub max_deviation: f64,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Relative tolerance of the multiplication identities.
pub const IDENTITY_TOL: f64 = 1e-9;

/// Doubling and tripling identities:
/// `R_2m = R^2 - 2S`, `S_2m = S^2 - 2R g^m`,
/// `R_3m = R^3 - 3RS + 3g^m`, `S_3m = S^3 - 3RS g^m + 3g^2m`.
pub fn multiplication_identities(state: &TripleSumState, m: usize) -> IdentityReport {
    let (r, s) = triple_sums(state, m);
    let (r2, s2) = triple_sums(state, 2 * m);
    let (r3, s3) = triple_sums(state, 3 * m);
    let gm = state.g.powu(m as u32);
    let candidates = [
        ("R_2m = R^2 - 2S", r2, r * r - 2.0 * s),
        ("S_2m = S^2 - 2R g^m", s2, s * s - 2.0 * r * gm),
        ("R_3m = R^3 - 3RS + 3g^m", r3, r * r * r - 3.0 * r * s + 3.0 * gm),
        (
            "S_3m = S^3 - 3RS g^m + 3g^2m",
            s3,
            s * s * s - 3.0 * r * s * gm + 3.0 * gm * gm,
        ),
    ];
    let checks: Vec<IdentityCheck> = candidates
        .into_iter()
        .map(|(name, lhs, rhs)| {
            let deviation = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1.0);
            IdentityCheck {
                name,
                recurrence: lhs,
                identity: rhs,
                deviation,
                pass: deviation <= IDENTITY_TOL,
            }
        })
        .collect();
    let max_deviation = checks.iter().map(|c| c.deviation).fold(0.0, f64::max);
    IdentityReport {
        m,
        checks,
        max_deviation,
    }
}

/// Four-radical sums `x`, `p`, `q`, `h` (elementary symmetric functions of
/// the radicals of `A, B, C, D`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadSumState {
    pub x: ComplexValue,
    pub p: ComplexValue,
    pub q: ComplexValue,
    pub h: ComplexValue,
    pub radicals: [ComplexValue; 4],
}

impl QuadSumState {
    pub fn new(values: [ComplexValue; 4], n: u32, branches: [u32; 4]) -> Self {
        let r = [0, 1, 2, 3].map(|i| nth_root_branch(values[i], n, branches[i]));
        Self::from_radicals(r)
    }

    pub fn from_radicals(r: [ComplexValue; 4]) -> Self {
        let mut p = ComplexValue::zero();
        let mut q = ComplexValue::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                p += r[i] * r[j];
                for k in j + 1..4 {
                    q += r[i] * r[j] * r[k];
                }
            }
        }
        QuadSumState {
            x: r.iter().sum(),
            p,
            q,
            h: r.iter().product(),
            radicals: r,
        }
    }

    /// Direct sums of m-th powers of the single radicals, of the pairwise
    /// products and of the triple products.
    pub fn power_sums(&self, m: u32) -> (ComplexValue, ComplexValue, ComplexValue) {
        let r = self.radicals;
        let mut singles = ComplexValue::zero();
        let mut pairs = ComplexValue::zero();
        let mut triples = ComplexValue::zero();
        for i in 0..4 {
            singles += r[i].powu(m);
            for j in i + 1..4 {
                pairs += (r[i] * r[j]).powu(m);
                for k in j + 1..4 {
                    triples += (r[i] * r[j] * r[k]).powu(m);
                }
            }
        }
        (singles, pairs, triples)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EliminationReport {
    pub alpha: ExactRational,
    pub beta: ExactRational,
    pub gamma: ExactRational,
    /// `z^3 - alpha z^2 + beta z - gamma`
    pub resolvent: Polynomial,
    /// Exact equality with the t-equation.
    pub matches_squared_resolvent: bool,
}

/// Rebuilds the t-equation by eliminating `p` from the fourth-root pair
/// equations. Matching `x^4 = 2R x^2 + 8 x g + 4S - R^2` against
/// `x^4 = a x^2 + b x + c` gives `R = a/2`, `g = b/8`, `S = c/4 + a^2/16`;
/// then `alpha = R^2 - 2S`, `beta = S^2 - 2R g^2`, `gamma = g^4`.
pub fn quartic_elimination(a: &ExactRational, b: &ExactRational, c: &ExactRational) -> EliminationReport {
    let r = a / int(2);
    let g = b / int(8);
    let s = c / int(4) + a * a / int(16);
    let alpha = &r * &r - int(2) * &s;
    let g2 = &g * &g;
    let beta = &s * &s - int(2) * &r * &g2;
    let gamma = &g2 * &g2;
    let resolvent = Polynomial::new(vec![-gamma.clone(), beta.clone(), -alpha.clone(), int(1)]);
    let matches_squared_resolvent = resolvent == squared_resolvent(a, b, c);
    EliminationReport {
        alpha,
        beta,
        gamma,
        resolvent,
        matches_squared_resolvent,
    }
}

/// `x^4 - 2 alpha x^2 - 8 x sqrt(gamma) - (4 beta - alpha^2)`, the quartic
/// obtained by eliminating `p` from `alpha = x^2 - 2p`,
/// `beta = p^2 - 2x sqrt(gamma)`.
pub fn square_root_elimination_quartic(
    alpha: &ExactRational,
    beta: &ExactRational,
    sqrt_gamma: &ExactRational,
) -> Polynomial {
    Polynomial::new(vec![
        alpha * alpha - int(4) * beta,
        int(-8) * sqrt_gamma,
        int(-2) * alpha,
        int(0),
        int(1),
    ])
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchStrategy {
    /// The single orbit `(k, -k, k, -k)`, `k = 0..n`.
    #[default]
    Paired,
    /// Every orbit of `(kA, kB, kC, kD)` under `(+1, -1, +1, -1)`: `n^3`
    /// candidate polynomials from `n^4` tuples.
    Full,
}

#[derive(Clone, Debug)]
pub struct ExplorerConfig {
    pub n: u32,
    pub strategy: BranchStrategy,
    /// Target for `nroot(A) * nroot(B)`; when absent the branch of
    /// `nroot(B)` nearest the principal root of `AB` divided by
    /// `nroot(A)` is used.
    pub ab_product: Option<ComplexValue>,
    pub cd_product: Option<ComplexValue>,
    pub execution: Execution,
}

impl Default for ExplorerConfig {
    fn default() -> Self {
        ExplorerConfig {
            n: 5,
            strategy: BranchStrategy::Paired,
            ab_product: None,
            cd_product: None,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub tuples: Vec<[u32; 4]>,
    pub values: Vec<ComplexValue>,
    /// Monic `prod (x - x_i)`, ascending.
    pub coeffs: Vec<ComplexValue>,
    /// Largest imaginary part among the coefficients.
    pub max_imag: f64,
    /// `|coefficient of x^(n-1)|`
    pub subleading: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExplorationReport {
    pub n: u32,
    pub strategy: BranchStrategy,
    pub base_radicals: [ComplexValue; 4],
    pub tuple_count: usize,
    pub candidates: Vec<Candidate>,
    /// Index of the candidate closest to a real, depressed polynomial.
    pub best: usize,
    pub warnings: Vec<String>,
}

impl ExplorationReport {
    pub fn is_well_formed(&self) -> bool {
        let n = self.n as usize;
        !self.candidates.is_empty()
            && self.best < self.candidates.len()
            && self.candidates.iter().all(|c| {
                c.tuples.len() == n
                    && c.values.len() == n
                    && c.coeffs.len() == n + 1
                    && c.coeffs.iter().all(|z| z.re.is_finite() && z.im.is_finite())
                    && c.max_imag.is_finite()
                    && c.subleading.is_finite()
            })
    }
}

fn paired_radical(
    base: ComplexValue,
    value: ComplexValue,
    n: u32,
    product: Option<ComplexValue>,
    combined: ComplexValue,
) -> ComplexValue {
    if base.norm() == 0.0 {
        return nth_root_branch(value, n, 0);
    }
    let target = product.unwrap_or_else(|| nth_root_branch(combined, n, 0)) / base;
    if product.is_some() && value.norm() == 0.0 {
        return ComplexValue::zero();
    }
    (0..n)
        .map(|k| nth_root_branch(value, n, k))
        .min_by(|u, v| (u - target).norm().total_cmp(&(v - target).norm()))
        .unwrap_or_default()
}

/// Sums of n-th roots of four values over branch orbits. Each candidate is
/// the monic polynomial whose roots are one orbit's sums; its distance from
/// a real polynomial without an `x^(n-1)` term is reported. Nothing is
/// asserted about the outcome.
pub fn quintic_explorer(values: [ComplexValue; 4], cfg: &ExplorerConfig) -> ExplorationReport {
    let n = cfg.n;
    assert!(n >= 2, "explorer needs n >= 2");
    let a = nth_root_branch(values[0], n, 0);
    let b = paired_radical(a, values[1], n, cfg.ab_product, values[0] * values[1]);
    let c = nth_root_branch(values[2], n, 0);
    let d = paired_radical(c, values[3], n, cfg.cd_product, values[2] * values[3]);
    let base = [a, b, c, d];

    let nu = n as usize;
    let orbit_count = match cfg.strategy {
        BranchStrategy::Paired => 1,
        BranchStrategy::Full => nu * nu * nu,
    };
    let mut warnings = Vec::new();
    if cfg.strategy == BranchStrategy::Full {
        warnings.push(format!(
            "full enumeration: {} branch tuples in {} orbits",
            nu.pow(4),
            orbit_count
        ));
    }

    let candidates = map_range(orbit_count, cfg.execution, |idx| {
        let kb = (idx / (nu * nu)) as u32;
        let kc = ((idx / nu) % nu) as u32;
        let kd = (idx % nu) as u32;
        let tuples: Vec<[u32; 4]> = (0..n)
            .map(|s| [s, (kb + n - s) % n, (kc + s) % n, (kd + n - s) % n])
            .collect();
        let values: Vec<ComplexValue> = tuples
            .iter()
            .map(|t| {
                (0..4)
                    .map(|i| unity(n, i64::from(t[i])) * base[i])
                    .sum()
            })
            .collect();
        let coeffs = expand_roots(&values);
        let max_imag = coeffs.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        let subleading = coeffs[nu - 1].norm();
        Candidate {
            tuples,
            values,
            coeffs,
            max_imag,
            subleading,
        }
    });
    let best = candidates
        .iter()
        .enumerate()
        .min_by(|(_, u), (_, v)| {
            (u.max_imag + u.subleading).total_cmp(&(v.max_imag + v.subleading))
        })
        .map(|(i, _)| i)
        .unwrap_or(0);
    ExplorationReport {
        n,
        strategy: cfg.strategy,
        base_radicals: base,
        tuple_count: orbit_count * nu,
        candidates,
        best,
        warnings,
    }
}
