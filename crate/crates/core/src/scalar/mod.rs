//! Exact arithmetic: rationals, the quadratic field ℚ(√d) and multivariate
//! Laurent polynomials over it.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{validate_d, Scalar, DEFAULT_D};
pub use monomial::{Monomial, Var};
pub use parse::{parse_expr, render};
pub use poly::{Assignment, LaurentPoly};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor is not a single term")]
    NonMonomialDivisor,
    #[error("parameter {0} is not assigned")]
    Unassigned(String),
    #[error("parameter {0} occurs in a denominator but is assigned 0")]
    ZeroDenominator(String),
    #[error("radicand {0} must be a square-free integer >= 2")]
    InvalidRadicand(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    NonMonomialDivisor,
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at offset {pos}: {}", match &.kind {
    ParseErrorKind::Syntax(m) => m.clone(),
    ParseErrorKind::NonMonomialDivisor => "divisor is not a single term".to_string(),
    ParseErrorKind::DivisionByZero => "division by zero".to_string(),
})]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

/// Shorthand for parsing with the default radicand; panics on malformed
/// input, so it is meant for fixtures and tests.
pub fn poly(text: &str) -> LaurentPoly {
    parse_expr(text, DEFAULT_D).unwrap_or_else(|e| panic!("bad fixture expression {text:?}: {e}"))
}
