//! Independent numeric root finder used to cross-check every closed form.
//!
//! The iteration is Aberth–Ehrlich: all roots are refined simultaneously
//! with the update `w_k = N_k / (1 - N_k * sum_{j != k} 1/(z_k - z_j))`,
//! `N_k = p(z_k) / p'(z_k)`, applied Jacobi-style so that the result depends
//! only on the input and configuration.

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::poly::{eval_complex, residual_scale_complex, Polynomial};

/// Fixed angular offset of the starting circle (radians).
const ANGLE_OFFSET: f64 = 0.577_215_664_901_532_9;

/// Residual bound every returned root must meet, relative to the residual
/// scale of the polynomial at that root.
pub const ORACLE_RESIDUAL_BOUND: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub max_iterations: usize,
    /// Stop once every update satisfies `|w_k| < tol * max(1, |z_k|)`.
    pub convergence_tol: f64,
    pub initial_radius_factor: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_iterations: 500,
            convergence_tol: 1e-13,
            initial_radius_factor: 1.0,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidArgument("max_iterations must be >= 1".into()));
        }
        if !(self.convergence_tol > 0.0) {
            return Err(Error::InvalidArgument("convergence_tol must be > 0".into()));
        }
        Ok(())
    }
}

pub fn find_roots_numeric(p: &Polynomial, cfg: &OracleConfig) -> Result<Vec<ComplexValue>> {
    find_roots_complex(&p.to_complex_coeffs(), cfg)
}

/// Root finder over complex (ascending) coefficients.
pub fn find_roots_complex(coeffs: &[ComplexValue], cfg: &OracleConfig) -> Result<Vec<ComplexValue>> {
    cfg.validate()?;
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let n = match coeffs.len().checked_sub(1) {
        Some(n) if n >= 1 => n,
        found => return Err(Error::DegreeTooLow { found, min: 1 }),
    };
    let lead = coeffs[n];
    let monic: Vec<ComplexValue> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return certify(&coeffs, vec![-monic[0]]);
    }
    let deriv: Vec<ComplexValue> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();

    let bound = monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let radius = (1.0 + bound) * cfg.initial_radius_factor;
    let mut z: Vec<ComplexValue> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + ANGLE_OFFSET;
            ComplexValue::from_polar(radius, angle)
        })
        .collect();

    let mut next = z.clone();
    for _ in 0..cfg.max_iterations {
        let mut converged = true;
        for k in 0..n {
            let zk = z[k];
            let pv = eval_complex(&monic, zk);
            if pv.norm() == 0.0 {
                next[k] = zk;
                continue;
            }
            let repulsion: ComplexValue = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = zk - z[j];
                    if d.norm() == 0.0 {
                        ComplexValue::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let dv = eval_complex(&deriv, zk);
            let w = if dv.norm() == 0.0 {
                // Weierstrass correction where the derivative vanishes.
                let denom: ComplexValue = (0..n)
                    .filter(|&j| j != k)
                    .map(|j| zk - z[j])
                    .product();
                pv / denom
            } else {
                let newton = pv / dv;
                newton / (ComplexValue::new(1.0, 0.0) - newton * repulsion)
            };
            let w = if w.re.is_finite() && w.im.is_finite() {
                w
            } else {
                ComplexValue::new(0.0, 0.0)
            };
            if w.norm() >= cfg.convergence_tol * zk.norm().max(1.0) {
                converged = false;
            }
            next[k] = zk - w;
        }
        std::mem::swap(&mut z, &mut next);
        if converged {
            break;
        }
    }
    certify(&coeffs, z)
}

fn certify(coeffs: &[ComplexValue], roots: Vec<ComplexValue>) -> Result<Vec<ComplexValue>> {
    let residuals: Vec<f64> = roots
        .iter()
        .map(|&r| eval_complex(coeffs, r).norm() / residual_scale_complex(coeffs, r))
        .collect();
    let worst = residuals.iter().cloned().fold(0.0, f64::max);
    let finite = roots.iter().all(|r| r.re.is_finite() && r.im.is_finite());
    if finite && worst <= ORACLE_RESIDUAL_BOUND {
        Ok(roots)
    } else {
        Err(Error::NonConvergence {
            roots,
            residuals,
            worst_residual: if worst.is_nan() { f64::INFINITY } else { worst },
        })
    }
}

/// Greedy nearest-pair matching of two root multisets. Pairs are taken in
/// order of increasing distance; the match succeeds only if every chosen
/// pair is within `tol`. Returns pairs `(index in u, index in v)`.
pub fn multiset_match(
    u: &[ComplexValue],
    v: &[ComplexValue],
    tol: f64,
) -> Result<Option<Vec<(usize, usize)>>> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let mut candidates: Vec<(f64, usize, usize)> = Vec::with_capacity(u.len() * v.len());
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            candidates.push(((a - b).norm(), i, j));
        }
    }
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut used_u = vec![false; u.len()];
    let mut used_v = vec![false; v.len()];
    let mut pairs = Vec::with_capacity(u.len());
    for (d, i, j) in candidates {
        if used_u[i] || used_v[j] {
            continue;
        }
        if !(d <= tol) {
            return Ok(None);
        }
        used_u[i] = true;
        used_v[j] = true;
        pairs.push((i, j));
    }
    pairs.sort_unstable();
    Ok(Some(pairs))
}

/// Convenience: whether two multisets match within `tol`.
pub fn multisets_agree(u: &[ComplexValue], v: &[ComplexValue], tol: f64) -> bool {
    matches!(multiset_match(u, v, tol), Ok(Some(_)))
}
