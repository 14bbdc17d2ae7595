//! Dense univariate polynomials over [`ExactRational`].
//!
//! Coefficients are stored ascending: `coeffs[k]` multiplies `x^k`. The zero
//! polynomial is the empty sequence and has no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::complex::{int, rational_display, to_complex, ComplexValue, ExactRational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: ExactRational, k: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    pub fn x() -> Self {
        Polynomial::monomial(ExactRational::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Monic polynomial with the given (rational) roots.
    pub fn from_roots(roots: &[ExactRational]) -> Self {
        roots.iter().fold(Polynomial::one(), |acc, r| {
            acc * Polynomial::new(vec![-r.clone(), ExactRational::one()])
        })
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &ExactRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => Polynomial::zero(),
        }
    }

    pub fn to_complex_coeffs(&self) -> Vec<ComplexValue> {
        self.coeffs.iter().map(to_complex).collect()
    }

    /// Horner evaluation; exact coefficients are rounded to doubles first.
    pub fn eval(&self, z: ComplexValue) -> ComplexValue {
        eval_complex(&self.to_complex_coeffs(), z)
    }

    pub fn eval_exact(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    /// Residual scale `sum_k |c_k| * max(1, |x|)^k` used for relative
    /// certification of a claimed root `x`.
    pub fn residual_scale(&self, x: ComplexValue) -> f64 {
        let r = x.norm().max(1.0);
        let mut pow = 1.0;
        let mut total = 0.0;
        for c in &self.coeffs {
            total += crate::complex::to_f64(c).abs() * pow;
            pow *= r;
        }
        total.max(f64::MIN_POSITIVE)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `p(x + s)`, by Horner's scheme over polynomials.
    pub fn shift(&self, s: &ExactRational) -> Polynomial {
        let lin = Polynomial::new(vec![s.clone(), ExactRational::one()]);
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            acc * lin.clone() + Polynomial::constant(c.clone())
        })
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients reversed: `x^deg * p(1/x)`.
    pub fn reversed(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn arith(&self, other: &Polynomial, op: PolyOp) -> Polynomial {
        match op {
            PolyOp::Add => self.clone() + other.clone(),
            PolyOp::Sub => self.clone() - other.clone(),
            PolyOp::Mul => self * other,
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = d.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(pd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if pd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![ExactRational::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Removes the `x^{n-1}` term: returns monic `q` and `shift` with
    /// `q(x) = p(x + shift) / lead(p)`, so `r` is a root of `q` exactly when
    /// `r + shift` is a root of `p`.
    pub fn depress(&self) -> Result<(Polynomial, ExactRational)> {
        let n = match self.degree() {
            Some(n) if n >= 2 => n,
            found => return Err(Error::DegreeTooLow { found, min: 2 }),
        };
        let lead = &self.coeffs[n];
        let shift = -(&self.coeffs[n - 1]) / (lead * int(n as i64));
        let q = self.shift(&shift).scale(&lead.recip());
        Ok((q, shift))
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Canonical infix text in descending powers, e.g. `x^3 - 6x - 9`.
    pub fn render(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                out.push_str(&rational_display(&mag));
            }
            match k {
                0 => {}
                1 => out.push(var),
                _ => {
                    out.push(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: PolyOp) -> Polynomial {
    p.arith(q, op)
}

/// Horner evaluation over complex coefficients.
pub fn eval_complex(coeffs: &[ComplexValue], z: ComplexValue) -> ComplexValue {
    coeffs
        .iter()
        .rev()
        .fold(ComplexValue::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Residual scale for complex coefficient lists.
pub fn residual_scale_complex(coeffs: &[ComplexValue], x: ComplexValue) -> f64 {
    let r = x.norm().max(1.0);
    let mut pow = 1.0;
    let mut total = 0.0;
    for c in coeffs {
        total += c.norm() * pow;
        pow *= r;
    }
    total.max(f64::MIN_POSITIVE)
}

/// Expands `prod (x - r_i)` numerically; ascending coefficients.
pub fn expand_roots(roots: &[ComplexValue]) -> Vec<ComplexValue> {
    let mut coeffs = vec![ComplexValue::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![ComplexValue::new(0.0, 0.0); coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

/// Product of two complex coefficient lists.
pub fn mul_complex(a: &[ComplexValue], b: &[ComplexValue]) -> Vec<ComplexValue> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ComplexValue::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('x'))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Polynomial::new(long)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
