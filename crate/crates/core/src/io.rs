//! JSON documents for algebras, operators, 3-Pre-Lie products and
//! 2-tensors. Indices are 1-based; coefficients are expression strings.

use serde::{Deserialize, Serialize};

use crate::ooperator::{OperatorError, ParamOperator};
use crate::prelie::{PreLieAlgebra, PreLieError};
use crate::scalar::{parse_expr, LaurentPoly, ParseError};
use crate::trisys::{Matrix, TriAlgebra, TrisysError, TwoTensor, Vector};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expression {text:?}: {source}")]
    Expr { text: String, source: ParseError },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Trisys(#[from] TrisysError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    PreLie(#[from] PreLieError),
}

fn expr(text: &str, d: u32) -> Result<LaurentPoly, IoError> {
    parse_expr(text, d).map_err(|source| IoError::Expr { text: text.to_string(), source })
}

fn coords(texts: &[String], dim: usize, d: u32) -> Result<Vector, IoError> {
    if texts.len() != dim {
        return Err(IoError::Shape(format!("expected {dim} coefficients, found {}", texts.len())));
    }
    Ok(Vector::new(texts.iter().map(|t| expr(t, d)).collect::<Result<_, _>>()?))
}

fn index(i: usize, dim: usize) -> Result<usize, IoError> {
    if (1..=dim).contains(&i) {
        Ok(i - 1)
    } else {
        Err(IoError::Shape(format!("index {i} outside 1..={dim}")))
    }
}

fn names(basis: &Option<Vec<String>>, dim: usize) -> Result<Vec<String>, IoError> {
    match basis {
        None => Ok((1..=dim).map(|i| format!("e{i}")).collect()),
        Some(b) if b.len() == dim => Ok(b.clone()),
        Some(b) => Err(IoError::Shape(format!("basis has {} names for dimension {dim}", b.len()))),
    }
}

fn strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeffs: Vec<String>,
}

/// `{ "dim", "basis", "d", "brackets": [{i<j<k, coeffs}] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default)]
    pub brackets: Vec<TripleEntry>,
}

impl AlgebraDoc {
    pub fn to_algebra(&self, d: u32) -> Result<TriAlgebra, IoError> {
        let mut a = TriAlgebra::with_names(names(&self.basis, self.dim)?);
        for b in &self.brackets {
            let (i, j, k) = (index(b.i, self.dim)?, index(b.j, self.dim)?, index(b.k, self.dim)?);
            if !(i < j && j < k) {
                return Err(IoError::Shape(format!("bracket indices ({},{},{}) must increase", b.i, b.j, b.k)));
            }
            a.set_bracket(i, j, k, coords(&b.coeffs, self.dim, d)?)?;
        }
        Ok(a)
    }

    pub fn from_algebra(a: &TriAlgebra, d: u32) -> Self {
        AlgebraDoc {
            dim: a.dim(),
            basis: Some(a.basis_names().to_vec()),
            d: Some(d),
            brackets: a
                .constants()
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(&[i, j, k], v)| TripleEntry { i: i + 1, j: j + 1, k: k + 1, coeffs: strings(v) })
                .collect(),
        }
    }
}

/// `{ "dim", "entries": rows, "sideConditions" }`; row `i` is `T(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OperatorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub side_conditions: Vec<String>,
}

impl OperatorDoc {
    pub fn to_operator(&self, d: u32) -> Result<ParamOperator, IoError> {
        if let Some(dim) = self.dim {
            if self.entries.len() != dim {
                return Err(IoError::Shape(format!("expected {dim} rows, found {}", self.entries.len())));
            }
        }
        let width = self.entries.first().map_or(0, Vec::len);
        let rows = self
            .entries
            .iter()
            .map(|r| Ok(coords(r, width, d)?.coords().to_vec()))
            .collect::<Result<Vec<_>, IoError>>()?;
        let side = self.side_conditions.iter().map(|t| expr(t, d)).collect::<Result<Vec<_>, _>>()?;
        Ok(ParamOperator::new(Matrix::from_rows(rows), side)?)
    }

    pub fn from_operator(t: &ParamOperator) -> Self {
        OperatorDoc {
            dim: Some(t.source_dim()),
            entries: (0..t.source_dim()).map(|i| strings(&t.image(i))).collect(),
            side_conditions: t.side_conditions().iter().map(ToString::to_string).collect(),
        }
    }
}

/// `{ "dim", "basis", "d", "products": [{i<j, k, coeffs}] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreLieDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default)]
    pub products: Vec<TripleEntry>,
}

impl PreLieDoc {
    pub fn to_prelie(&self, d: u32) -> Result<PreLieAlgebra, IoError> {
        let mut p = PreLieAlgebra::with_names(names(&self.basis, self.dim)?);
        for e in &self.products {
            let (i, j, k) = (index(e.i, self.dim)?, index(e.j, self.dim)?, index(e.k, self.dim)?);
            if i >= j {
                return Err(IoError::Shape(format!("product indices require i < j, found ({},{})", e.i, e.j)));
            }
            p.set_product(i, j, k, coords(&e.coeffs, self.dim, d)?)?;
        }
        Ok(p)
    }

    pub fn from_prelie(p: &PreLieAlgebra, d: u32) -> Self {
        PreLieDoc {
            dim: p.dim(),
            basis: Some(p.basis_names().to_vec()),
            d: Some(d),
            products: p
                .constants()
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(&[i, j, k], v)| TripleEntry { i: i + 1, j: j + 1, k: k + 1, coeffs: strings(v) })
                .collect(),
        }
    }
}

/// `{ "dim", "coeffs": rows }`; `coeffs[p][q]` multiplies `e_p ⊗ e_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDoc {
    pub dim: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl TensorDoc {
    pub fn to_tensor(&self, d: u32) -> Result<TwoTensor, IoError> {
        if self.coeffs.len() != self.dim {
            return Err(IoError::Shape(format!("expected {} rows, found {}", self.dim, self.coeffs.len())));
        }
        let rows = self
            .coeffs
            .iter()
            .map(|r| Ok(coords(r, self.dim, d)?.coords().to_vec()))
            .collect::<Result<Vec<_>, IoError>>()?;
        Ok(TwoTensor::from_rows(rows))
    }

    pub fn from_tensor(r: &TwoTensor) -> Self {
        TensorDoc {
            dim: r.dim(),
            coeffs: r.rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, IoError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ooperator::family;

    #[test]
    fn algebra_round_trip() {
        let a = TriAlgebra::a3();
        let doc = AlgebraDoc::from_algebra(&a, 3);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"dim":3,"basis":["e1","e2","e3"],"d":3,"brackets":[{"i":1,"j":2,"k":3,"coeffs":["1","0","0"]}]}"#);
        assert_eq!(read_json::<AlgebraDoc>(&text).unwrap().to_algebra(3).unwrap(), a);
    }

    #[test]
    fn operator_round_trip_keeps_side_conditions() {
        let o4 = family("O4").unwrap().operator;
        let doc = OperatorDoc::from_operator(&o4);
        assert_eq!(doc.side_conditions, vec!["a13".to_string()]);
        assert_eq!(doc.to_operator(3).unwrap(), o4);
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let doc: AlgebraDoc = read_json(r#"{"dim":3,"brackets":[{"i":2,"j":1,"k":3,"coeffs":["1","0","0"]}]}"#).unwrap();
        assert!(doc.to_algebra(3).is_err());
        let doc: AlgebraDoc = read_json(r#"{"dim":3,"brackets":[{"i":1,"j":2,"k":4,"coeffs":["1","0","0"]}]}"#).unwrap();
        assert!(doc.to_algebra(3).is_err());
        let doc: OperatorDoc = read_json(r#"{"entries":[["1/(a+b)"]]}"#).unwrap();
        assert!(matches!(doc.to_operator(3), Err(IoError::Expr { .. })));
        assert!(read_json::<TensorDoc>("{").is_err());
    }

    #[test]
    fn prelie_and_tensor_round_trip() {
        let mut p = PreLieAlgebra::zero(2);
        p.set_product(0, 1, 1, Vector::from_ints(&[3, -1])).unwrap();
        assert_eq!(PreLieDoc::from_prelie(&p, 3).to_prelie(3).unwrap(), p);
        let r = crate::cybe::printed_solution(30).unwrap();
        assert_eq!(TensorDoc::from_tensor(&r).to_tensor(3).unwrap(), r);
    }
}
