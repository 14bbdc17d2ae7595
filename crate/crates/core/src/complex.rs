//! Scalar domains: exact rationals for algebra, double-precision complex
//! numbers for evaluation.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision rational; always stored reduced with a positive
/// denominator.
pub type ExactRational = num_rational::BigRational;

/// Numeric evaluation domain.
pub type ComplexValue = num_complex::Complex64;

pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Nearest double to `q`. Huge numerators or denominators are scaled down
/// before the division so the result stays finite whenever the quotient is.
pub fn to_f64(q: &ExactRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 900).max(0) as usize;
    let shift_d = (db - 900).max(0) as usize;
    let n = (q.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

pub fn to_complex(q: &ExactRational) -> ComplexValue {
    ComplexValue::new(to_f64(q), 0.0)
}

/// Renders `q` as `"num/den"`, the form used in structured documents.
pub fn rational_to_string(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Compact rendering: integers without a denominator.
pub fn rational_display(q: &ExactRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"n"`, `"n/d"` or a signed form of either.
pub fn parse_rational(text: &str) -> Option<ExactRational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(ExactRational::new(n, d))
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// by continued fractions.
pub fn rational_approximation(x: f64, max_den: i64) -> Option<ExactRational> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(ExactRational::new(BigInt::from(h1), BigInt::from(k1)))
}

/// `|v|` scaled distance helper used by the tolerance checks.
pub fn rel_close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

pub fn is_finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
