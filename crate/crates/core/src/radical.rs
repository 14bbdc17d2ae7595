//! Radical expression trees: rationals combined by sums, products and
//! branch-indexed n-th roots.
//!
//! An n-th root is multivalued; `Root { index: n, branch: k, .. }` names the
//! value `|v|^(1/n) * exp(i (arg v + 2 pi k) / n)` with `arg v` in
//! `(-pi, pi]`. Branch 0 is the principal root, so the principal root of a
//! positive rational is the positive real root.

use std::f64::consts::PI;
use std::fmt;

use num_traits::{One, Zero};

use crate::complex::{rational_display, rat, to_complex, ComplexValue, ExactRational};

#[derive(Clone, Debug, PartialEq)]
pub enum RadicalExpr {
    Const(ExactRational),
    Sum(Vec<RadicalExpr>),
    Product(Vec<RadicalExpr>),
    Root {
        index: u32,
        radicand: Box<RadicalExpr>,
        branch: u32,
    },
}

/// The single supported branch convention: principal argument in
/// `(-pi, pi]`, branches counted counter-clockwise from it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchConvention {
    #[default]
    Principal,
}

impl BranchConvention {
    pub fn name(self) -> &'static str {
        "principal"
    }

    pub fn parse(text: &str) -> Option<Self> {
        (text == "principal").then_some(BranchConvention::Principal)
    }
}

/// Argument in `(-pi, pi]`; a negative real with a signed-zero imaginary
/// part maps to `pi`.
pub fn principal_arg(v: ComplexValue) -> f64 {
    if v.im == 0.0 {
        if v.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        v.im.atan2(v.re)
    }
}

/// Branch `k` of the n-th root of `v`.
pub fn nth_root_branch(v: ComplexValue, n: u32, k: u32) -> ComplexValue {
    if v.re == 0.0 && v.im == 0.0 {
        return ComplexValue::new(0.0, 0.0);
    }
    let n_f = f64::from(n);
    let modulus = v.norm().powf(1.0 / n_f);
    let angle = (principal_arg(v) + 2.0 * PI * f64::from(k % n)) / n_f;
    ComplexValue::from_polar(modulus, angle)
}

/// `exp(2 pi i k / n)`
pub fn unity(n: u32, k: i64) -> ComplexValue {
    let k = k.rem_euclid(i64::from(n));
    ComplexValue::from_polar(1.0, 2.0 * PI * k as f64 / f64::from(n))
}

impl RadicalExpr {
    pub fn constant(q: ExactRational) -> Self {
        RadicalExpr::Const(q)
    }

    pub fn int(n: i64) -> Self {
        RadicalExpr::Const(rat(n, 1))
    }

    /// Branch `k` (reduced modulo `n`) of the n-th root of `radicand`.
    ///
    /// Panics if `n < 2`.
    pub fn root(n: u32, radicand: RadicalExpr, branch: i64) -> Self {
        assert!(n >= 2, "root index must be at least 2");
        RadicalExpr::Root {
            index: n,
            radicand: Box::new(radicand),
            branch: branch.rem_euclid(i64::from(n)) as u32,
        }
    }

    pub fn sqrt(radicand: RadicalExpr) -> Self {
        RadicalExpr::root(2, radicand, 0)
    }

    /// Sum node; a single child is returned unwrapped and an empty sum is 0.
    pub fn sum(children: Vec<RadicalExpr>) -> Self {
        match children.len() {
            0 => RadicalExpr::Const(ExactRational::zero()),
            1 => children.into_iter().next().unwrap(),
            _ => RadicalExpr::Sum(children),
        }
    }

    /// Product node; a single child is returned unwrapped and an empty
    /// product is 1.
    pub fn product(children: Vec<RadicalExpr>) -> Self {
        match children.len() {
            0 => RadicalExpr::Const(ExactRational::one()),
            1 => children.into_iter().next().unwrap(),
            _ => RadicalExpr::Product(children),
        }
    }

    pub fn scaled(q: ExactRational, e: RadicalExpr) -> Self {
        if q.is_one() {
            e
        } else {
            RadicalExpr::Product(vec![RadicalExpr::Const(q), e])
        }
    }

    pub fn neg(e: RadicalExpr) -> Self {
        RadicalExpr::Product(vec![RadicalExpr::int(-1), e])
    }

    pub fn eval(&self) -> ComplexValue {
        match self {
            RadicalExpr::Const(q) => to_complex(q),
            RadicalExpr::Sum(children) => children.iter().map(RadicalExpr::eval).sum(),
            RadicalExpr::Product(children) => children.iter().map(RadicalExpr::eval).product(),
            RadicalExpr::Root {
                index,
                radicand,
                branch,
            } => nth_root_branch(radicand.eval(), *index, *branch),
        }
    }

    /// Checks the structural invariants: branch below index, index at least
    /// 2, and at least two children per sum or product.
    pub fn is_well_formed(&self) -> bool {
        match self {
            RadicalExpr::Const(_) => true,
            RadicalExpr::Sum(c) | RadicalExpr::Product(c) => {
                c.len() >= 2 && c.iter().all(RadicalExpr::is_well_formed)
            }
            RadicalExpr::Root {
                index,
                radicand,
                branch,
            } => *index >= 2 && branch < index && radicand.is_well_formed(),
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalExpr::Sum(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalExpr::Const(q) => f.write_str(&rational_display(q)),
            RadicalExpr::Sum(children) => {
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            RadicalExpr::Product(children) => {
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    c.fmt_factor(f)?;
                }
                Ok(())
            }
            RadicalExpr::Root {
                index,
                radicand,
                branch,
            } => write!(f, "root({index}, {radicand}, {branch})"),
        }
    }
}

/// One n-th root of unity, with an exact radical form when available.
#[derive(Clone, Debug)]
pub struct UnityRoot {
    pub k: u32,
    pub exact: Option<RadicalExpr>,
    pub value: ComplexValue,
}

/// `sqrt(-3)`
fn sqrt_minus_three() -> RadicalExpr {
    RadicalExpr::sqrt(RadicalExpr::int(-3))
}

/// `(s1 + s2 sqrt(5) + s3 sqrt(-10 + s4 2 sqrt(5))) / 4` with the signs
/// given; the surd forms of the fifth roots of unity.
fn fifth_root_form(s1: i64, s2: i64, s3: i64, s4: i64) -> RadicalExpr {
    let sqrt5 = || RadicalExpr::sqrt(RadicalExpr::int(5));
    let inner = RadicalExpr::sum(vec![
        RadicalExpr::int(-10),
        RadicalExpr::scaled(rat(2 * s4, 1), sqrt5()),
    ]);
    RadicalExpr::scaled(
        rat(1, 4),
        RadicalExpr::sum(vec![
            RadicalExpr::int(s1),
            RadicalExpr::scaled(rat(s2, 1), sqrt5()),
            RadicalExpr::scaled(rat(s3, 1), RadicalExpr::sqrt(inner)),
        ]),
    )
}

/// Exact radical form of `exp(2 pi i k / n)` for `n <= 6`.
pub fn exact_unity_root(n: u32, k: u32) -> Option<RadicalExpr> {
    let k = k % n.max(1);
    let e = match (n, k) {
        (_, 0) => RadicalExpr::int(1),
        (2, 1) | (4, 2) | (6, 3) => RadicalExpr::int(-1),
        (3, 1) => RadicalExpr::scaled(
            rat(1, 2),
            RadicalExpr::sum(vec![RadicalExpr::int(-1), sqrt_minus_three()]),
        ),
        (3, 2) => RadicalExpr::scaled(
            rat(1, 2),
            RadicalExpr::sum(vec![RadicalExpr::int(-1), RadicalExpr::neg(sqrt_minus_three())]),
        ),
        (4, 1) => RadicalExpr::sqrt(RadicalExpr::int(-1)),
        (4, 3) => RadicalExpr::neg(RadicalExpr::sqrt(RadicalExpr::int(-1))),
        (5, 1) => fifth_root_form(-1, 1, 1, -1),
        (5, 2) => fifth_root_form(-1, -1, 1, 1),
        (5, 3) => fifth_root_form(-1, -1, -1, 1),
        (5, 4) => fifth_root_form(-1, 1, -1, -1),
        (6, 1) => RadicalExpr::scaled(
            rat(1, 2),
            RadicalExpr::sum(vec![RadicalExpr::int(1), sqrt_minus_three()]),
        ),
        (6, 2) => exact_unity_root(3, 1)?,
        (6, 4) => exact_unity_root(3, 2)?,
        (6, 5) => RadicalExpr::scaled(
            rat(1, 2),
            RadicalExpr::sum(vec![RadicalExpr::int(1), RadicalExpr::neg(sqrt_minus_three())]),
        ),
        _ => return None,
    };
    Some(e)
}

/// All n-th roots of unity in counter-clockwise order from 1. Exact radical
/// forms are attached for `n <= 6`; larger `n` carry numeric values only.
pub fn roots_of_unity(n: u32) -> Vec<UnityRoot> {
    assert!(n >= 1, "roots_of_unity needs n >= 1");
    (0..n)
        .map(|k| UnityRoot {
            k,
            exact: if n <= 6 { exact_unity_root(n, k) } else { None },
            value: unity(n, i64::from(k)),
        })
        .collect()
}
