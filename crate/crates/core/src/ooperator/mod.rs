//! Operators satisfying `[Tx,Ty,Tz] = T([Tx,Ty,z] + [Tz,Tx,y] + [Ty,Tz,x])`:
//! the identity in direct and structure-constant form, the 31 families on
//! the 3-dimensional algebra, membership classification and an integer
//! grid search.

mod catalogue;
mod check;
mod classify;
mod operator;

pub use catalogue::{catalogue, family, verify_catalogue, CatalogueReport, Family, FamilyCheck};
pub use check::{
    check_o_operator_direct, check_o_operator_expanded, check_o_operator_rep, conditions_vanish_i64,
    o_residual_direct, o_residual_expanded, specialized_conditions_3d, OViolation,
};
pub use classify::{
    classify_matrix, classify_with, grid_completeness_search, match_family, operator_from_scalars,
    scalars_from_i64, FamilyMatch, GridReport, ScalarMatrix3,
};
pub use operator::ParamOperator;

use crate::scalar::ScalarError;
use crate::trisys::TrisysError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operator matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("parameter {0} occurs in a denominator but has no side condition")]
    UncoveredDenominator(String),
    #[error("side condition {0} != 0 is violated")]
    SideCondition(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Trisys(#[from] TrisysError),
}
