//! Closed-form polynomial root extraction by resolvent equations.
//!
//! Quadratics, cubics and quartics are solved through their resolvent
//! equations; de Moivre-form equations of any degree and reciprocal
//! (palindromic) equations of degree `2n` are reduced to lower-degree
//! problems. Every closed form is evaluated numerically and certified
//! against the source polynomial, and an independent simultaneous-iteration
//! root finder serves as the cross-check oracle.
//!
//! Exact algebra runs over [`ExactRational`]; numeric evaluation runs over
//! [`ComplexValue`]. Polynomials are stored dense with ascending degree.

pub mod batch;
pub mod complex;
pub mod error;
pub mod exec;
pub mod moivre;
pub mod oracle;
pub mod poly;
pub mod radical;
pub mod reciprocal;
pub mod resolvent;
pub mod sumcheck;

pub use complex::{ComplexValue, ExactRational};
pub use error::{Error, Result};
pub use exec::Execution;
pub use poly::Polynomial;
pub use radical::RadicalExpr;
pub use resolvent::{ResolventReport, RootCertificate};
