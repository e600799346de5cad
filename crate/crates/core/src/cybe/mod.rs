//! The 3-Lie classical Yang-Baxter bracket, tensors built from
//! O-operators on the coadjoint double, and the printed solutions.

mod bracket;
mod fixtures;
mod lemma;
mod verify;

pub use bracket::{switch12, yang_baxter_bracket, yang_baxter_bracket_with, YangBaxterWitness};
pub use fixtures::{printed_rows, printed_solution, solution_count};
pub use lemma::{coadjoint_double, tensor_from_operator};
pub use verify::{check_solution, tensor_diff, verify_cybe_catalogue, CybeReport, SolutionCheck, TensorMismatch};

use crate::ooperator::OperatorError;
use crate::trisys::TrisysError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CybeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis names do not follow the e_i / e_i* convention: {0}")]
    IndexConvention(String),
    #[error("unknown solution {0}")]
    UnknownSolution(String),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Trisys(#[from] TrisysError),
}
