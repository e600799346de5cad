//! 3-Pre-Lie algebras: products skew in the first two slots, their axioms,
//! the sub-adjacent 3-Lie bracket, induction from O-operators and the
//! printed induced tables.

mod algebra;
mod axioms;
mod dim2;
mod induce;
mod tables;

pub use algebra::{sub_adjacent, PreLieAlgebra};
pub use axioms::{
    check_pre_lie_axioms, check_pre_lie_axioms_exhaustive, check_pre_lie_by_constants, pre_lie_residual,
    PreLieAxiom, PreLieViolation,
};
pub use dim2::{dim2_experiment, generic_dim2, Dim2Report, TrivialityVerdict};
pub use induce::{
    diff_family, induce_from_operator, induce_from_operator_unchecked, induce_from_representation,
    induce_from_representation_unchecked, is_known_table_finding, table_diff, FamilyTableDiff, ProductMismatch,
    KNOWN_TABLE_FINDINGS,
};
pub use tables::{printed_table, printed_tables, PrintedTable, TableEntry};

use crate::ooperator::OperatorError;
use crate::trisys::TrisysError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PreLieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("the first two slots of a product must differ")]
    RepeatedIndex,
    #[error("not an O-operator: the identity fails on {0} basis triples")]
    NotAnOOperator(usize),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Trisys(#[from] TrisysError),
}
