//! 3-Lie algebras given by structure constants, their representations,
//! semidirect products and tensor powers.

mod algebra;
mod identity;
mod linalg;
mod rep;
mod tensor;

pub use algebra::{sort3, TriAlgebra};
pub use identity::{
    check_fundamental_identity, check_fundamental_identity_exhaustive, fi_residual, fi_residual_vectors,
    FiViolation,
};
pub use linalg::{Matrix, Vector};
pub use rep::{
    adjoint_rep, check_representation, check_representation_exhaustive, coadjoint_rep, semidirect,
    semidirect_unchecked, RepAxiom, RepViolation, Representation,
};
pub use tensor::{FourTensor, TwoTensor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrisysError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("repeated basis index in a skew-symmetric slot")]
    RepeatedIndex,
    #[error("representation axioms fail on {0} basis tuples")]
    NotARepresentation(usize),
}
