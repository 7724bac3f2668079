//! Exact rational scalars and sparse weighted-graded multivariate polynomials.

mod monomial;
mod parse;
mod polynomial;
mod scalar;
mod vars;

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use scalar::Scalar;
pub use vars::{VariableSet, Vars};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("operands live over different variable sets")]
    VariableSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Usage(String),
}
