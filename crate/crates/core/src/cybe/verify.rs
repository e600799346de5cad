use super::{coadjoint_double, printed_solution, tensor_from_operator, yang_baxter_bracket_with, CybeError};
use crate::ooperator::{check_o_operator_direct, Family};
use crate::par::{self, Jobs};
use crate::scalar::LaurentPoly;
use crate::trisys::{TriAlgebra, TwoTensor};

/// A coefficient `(p, q)` of `e_p ⊗ e_q` where two tensors differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMismatch {
    pub index: [usize; 2],
    pub built: LaurentPoly,
    pub printed: LaurentPoly,
}

pub fn tensor_diff(built: &TwoTensor, printed: &TwoTensor) -> Vec<TensorMismatch> {
    let n = built.dim().max(printed.dim());
    let get = |t: &TwoTensor, p: usize, q: usize| {
        if p < t.dim() && q < t.dim() {
            t.coeff(p, q).clone()
        } else {
            LaurentPoly::zero()
        }
    };
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let (b, r) = (get(built, p, q), get(printed, p, q));
            if b != r {
                out.push(TensorMismatch { index: [p, q], built: b, printed: r });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCheck {
    /// `r1`, `r2`, ...
    pub name: String,
    pub family: String,
    pub operator_ok: bool,
    pub skew: bool,
    /// Nonzero slots of `[[r,r,r]]` for the tensor built from the operator.
    pub bracket_nonzero: usize,
    /// Nonzero slots of `[[r,r,r]]` for the printed tensor.
    pub printed_bracket_nonzero: usize,
    pub fixture_diff: Vec<TensorMismatch>,
}

impl SolutionCheck {
    pub fn passed(&self) -> bool {
        self.skew && self.bracket_nonzero == 0 && self.fixture_diff.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CybeReport {
    pub solutions: Vec<SolutionCheck>,
}

impl CybeReport {
    pub fn passed(&self) -> bool {
        !self.solutions.is_empty() && self.solutions.iter().all(SolutionCheck::passed)
    }
}

pub fn check_solution(double: &TriAlgebra, f: &Family) -> Result<SolutionCheck, CybeError> {
    let index = f.index().ok_or_else(|| CybeError::UnknownSolution(f.name.clone()))?;
    let a3 = TriAlgebra::a3();
    let built = tensor_from_operator(double, &f.operator)?;
    let printed = printed_solution(index).ok_or_else(|| CybeError::UnknownSolution(f.name.clone()))?;
    let nonzero = |r: &TwoTensor| -> Result<usize, CybeError> {
        Ok(yang_baxter_bracket_with(double, r, Jobs::Sequential)?.nonzero().len())
    };
    Ok(SolutionCheck {
        name: format!("r{index}"),
        family: f.name.clone(),
        operator_ok: check_o_operator_direct(&a3, &f.operator)?.is_empty(),
        skew: built.is_skew_symmetric(),
        bracket_nonzero: nonzero(&built)?,
        printed_bracket_nonzero: nonzero(&printed)?,
        fixture_diff: tensor_diff(&built, &printed),
    })
}

/// Builds `r_i` from each family's operator on `A₃ ⋉_{ad*} A₃*` and checks
/// skew-symmetry, the bracket, and agreement with the printed tensor.
pub fn verify_cybe_catalogue(families: &[Family], jobs: Jobs) -> Result<CybeReport, CybeError> {
    let double = coadjoint_double(&TriAlgebra::a3());
    let solutions = par::map(jobs, families, |f| check_solution(&double, f)).into_iter().collect::<Result<_, _>>()?;
    Ok(CybeReport { solutions })
}
