use std::collections::BTreeSet;
use std::fmt;

use super::OperatorError;
use crate::scalar::{Assignment, LaurentPoly, Scalar, Var};
use crate::trisys::{Matrix, Vector};

/// A linear map given by a matrix of Laurent polynomials whose row `i` holds
/// the coordinates of `T(e_i)`, together with the expressions that must not
/// vanish for the entries to make sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamOperator {
    entries: Matrix,
    side_conditions: Vec<LaurentPoly>,
}

impl ParamOperator {
    /// Builds an operator, rejecting entries whose denominators are not
    /// covered by a single-term side condition.
    pub fn new(entries: Matrix, side_conditions: Vec<LaurentPoly>) -> Result<Self, OperatorError> {
        let covered: BTreeSet<Var> = side_conditions
            .iter()
            .filter_map(LaurentPoly::as_single_term)
            .flat_map(|(_, m)| m.factors().iter().map(|(v, _)| v.clone()).collect::<Vec<_>>())
            .collect();
        for p in entries.entries() {
            if let Some(v) = p.denominator_vars().into_iter().find(|v| !covered.contains(v)) {
                return Err(OperatorError::UncoveredDenominator(v.to_string()));
            }
        }
        Ok(ParamOperator { entries, side_conditions })
    }

    /// An operator with no side conditions; entries must be polynomial.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, OperatorError> {
        Self::new(Matrix::from_rows(rows), Vec::new())
    }

    pub fn zero(dim: usize) -> Self {
        ParamOperator { entries: Matrix::zero(dim, dim), side_conditions: Vec::new() }
    }

    pub fn identity(dim: usize) -> Self {
        ParamOperator { entries: Matrix::identity(dim), side_conditions: Vec::new() }
    }

    /// The fully generic `n×n` operator with entries `a{i}{j}` (1-based).
    pub fn generic(dim: usize) -> Self {
        let rows = (1..=dim)
            .map(|i| (1..=dim).map(|j| LaurentPoly::var(format!("a{i}{j}"))).collect())
            .collect();
        ParamOperator { entries: Matrix::from_rows(rows), side_conditions: Vec::new() }
    }

    /// Dimension of the source space (number of rows).
    pub fn source_dim(&self) -> usize {
        self.entries.rows()
    }

    /// Dimension of the target space (number of columns).
    pub fn target_dim(&self) -> usize {
        self.entries.cols()
    }

    pub fn is_square(&self) -> bool {
        self.entries.rows() == self.entries.cols()
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[(i, j)]
    }

    pub fn side_conditions(&self) -> &[LaurentPoly] {
        &self.side_conditions
    }

    pub fn parameters(&self) -> BTreeSet<Var> {
        self.entries.entries().iter().flat_map(LaurentPoly::variables).collect()
    }

    /// `T(e_i)`.
    pub fn image(&self, i: usize) -> Vector {
        Vector::new(self.entries.row(i).to_vec())
    }

    /// `T(v) = Σ v_i T(e_i)`.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.target_dim());
        for i in 0..self.source_dim() {
            if !v[i].is_zero() {
                out.add_scaled(&v[i], &self.image(i));
            }
        }
        out
    }

    /// First side condition that evaluates to zero under `sigma`.
    pub fn violated_side_condition(&self, sigma: &Assignment) -> Result<Option<&LaurentPoly>, OperatorError> {
        for c in &self.side_conditions {
            if c.substitute_partial(sigma)?.is_zero() {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    /// Instantiates the parameters in `sigma`. Side conditions that become
    /// constant must be nonzero; the rest are carried over.
    pub fn substitute(&self, sigma: &Assignment) -> Result<ParamOperator, OperatorError> {
        if let Some(c) = self.violated_side_condition(sigma)? {
            return Err(OperatorError::SideCondition(c.to_string()));
        }
        let rows = (0..self.source_dim())
            .map(|i| {
                self.entries
                    .row(i)
                    .iter()
                    .map(|p| p.substitute_partial(sigma))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut side = Vec::new();
        for c in &self.side_conditions {
            let c = c.substitute_partial(sigma)?;
            if c.as_constant().is_none() {
                side.push(c);
            }
        }
        Ok(ParamOperator { entries: Matrix::from_rows(rows), side_conditions: side })
    }

    /// The entries as scalars when no parameter remains.
    pub fn scalar_rows(&self) -> Option<Vec<Vec<Scalar>>> {
        (0..self.source_dim())
            .map(|i| self.entries.row(i).iter().map(LaurentPoly::as_constant).collect())
            .collect()
    }

    /// Replaces one entry; used for mutation tests.
    pub fn with_entry(&self, i: usize, j: usize, p: LaurentPoly) -> ParamOperator {
        let mut out = self.clone();
        out.entries[(i, j)] = p;
        out
    }
}

impl fmt::Display for ParamOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.source_dim() {
            let row: Vec<String> = self.entries.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        if !self.side_conditions.is_empty() {
            let cs: Vec<String> = self.side_conditions.iter().map(|c| format!("{c} != 0")).collect();
            write!(f, "where {}", cs.join(", "))?;
        }
        Ok(())
    }
}
