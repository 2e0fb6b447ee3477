//! Exact multivariate polynomials over the rationals.

mod gcd;
mod multi_index;
mod parse;
mod polynomial;

use alloc::string::String;

pub use gcd::{poly_gcd, poly_lcm};
pub use multi_index::{binomial, multiindices, multiindices_of_degree, MultiIndex};
pub use parse::{parse_poly, parse_poly_with};
pub use polynomial::{rat, ratio, Polynomial, Rational, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent must be a non-negative integer")]
    BadExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("at position {position}: {kind}")]
    Parse {
        position: usize,
        kind: ParseErrorKind,
    },
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("substitution needs at least one image")]
    EmptySubstitution,
}
