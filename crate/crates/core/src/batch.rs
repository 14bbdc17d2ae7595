//! Cross-checking closed forms against the numeric oracle, one polynomial or
//! a whole corpus at a time.

use crate::complex::ComplexValue;
use crate::error::Result;
use crate::exec::{map_ordered, Execution};
use crate::oracle::{find_roots_numeric, multisets_agree, OracleConfig};
use crate::poly::Polynomial;
use crate::resolvent::{solve_closed_form, ResolventReport};

/// Default multiset tolerance between closed-form and oracle roots.
pub const MATCH_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub report: ResolventReport,
    pub oracle_roots: Vec<ComplexValue>,
    pub matched: bool,
}

impl CrossCheck {
    pub fn passes(&self) -> bool {
        self.matched && self.report.all_certified()
    }
}

pub fn cross_check(p: &Polynomial, match_tol: f64) -> Result<CrossCheck> {
    let report = solve_closed_form(p)?;
    let oracle_roots = find_roots_numeric(p, &OracleConfig::default())?;
    let matched = multisets_agree(&report.numeric_roots(), &oracle_roots, match_tol);
    Ok(CrossCheck {
        report,
        oracle_roots,
        matched,
    })
}

/// [`cross_check`] over a corpus; results keep the input order.
pub fn cross_check_many(polys: &[Polynomial], match_tol: f64, exec: Execution) -> Vec<Result<CrossCheck>> {
    map_ordered(polys, exec, |p| cross_check(p, match_tol))
}
