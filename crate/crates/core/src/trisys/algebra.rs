use std::collections::BTreeMap;

use super::{TrisysError, Vector};
use crate::scalar::LaurentPoly;

/// Sorts three indices, returning the sign of the sorting permutation, or
/// `None` when an index repeats.
pub fn sort3(i: usize, j: usize, k: usize) -> Option<(i8, [usize; 3])> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut sign = 1i8;
    for a in 0..3 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, t))
}

/// A finite-dimensional vector space with a skew-symmetric ternary bracket,
/// given by structure constants on strictly increasing basis triples.
///
/// Indices are 0-based in the API; documents and reports use 1-based ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    constants: BTreeMap<[usize; 3], Vector>,
}

impl TriAlgebra {
    /// The algebra with zero bracket and basis names `e1..en`.
    pub fn zero(dim: usize) -> Self {
        Self::with_names((1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn with_names(basis_names: Vec<String>) -> Self {
        TriAlgebra {
            dim: basis_names.len(),
            basis_names,
            constants: BTreeMap::new(),
        }
    }

    /// The 3-dimensional algebra `[e1, e2, e3] = e1`.
    pub fn a3() -> Self {
        let mut a = Self::zero(3);
        a.set_bracket(0, 1, 2, Vector::from_ints(&[1, 0, 0]))
            .expect("valid indices");
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Nonzero structure constants keyed by increasing triples.
    pub fn constants(&self) -> &BTreeMap<[usize; 3], Vector> {
        &self.constants
    }

    /// Sets `[e_i, e_j, e_k] = value` for any distinct triple; the value
    /// stored for the sorted triple carries the permutation sign.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: Vector) -> Result<(), TrisysError> {
        for idx in [i, j, k] {
            if idx >= self.dim {
                return Err(TrisysError::IndexOutOfRange { index: idx + 1, dim: self.dim });
            }
        }
        if value.dim() != self.dim {
            return Err(TrisysError::DimensionMismatch { expected: self.dim, found: value.dim() });
        }
        let (sign, key) = sort3(i, j, k).ok_or(TrisysError::RepeatedIndex)?;
        let value = if sign < 0 { value.neg() } else { value };
        if value.is_zero() {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, value);
        }
        Ok(())
    }

    /// `[e_i, e_j, e_k]` for arbitrary indices.
    pub fn basis_bracket(&self, i: usize, j: usize, k: usize) -> Vector {
        match sort3(i, j, k) {
            None => Vector::zero(self.dim),
            Some((sign, key)) => match self.constants.get(&key) {
                None => Vector::zero(self.dim),
                Some(v) if sign > 0 => v.clone(),
                Some(v) => v.neg(),
            },
        }
    }

    /// Structure constant C_{ijk}^t.
    pub fn constant(&self, i: usize, j: usize, k: usize, t: usize) -> LaurentPoly {
        match sort3(i, j, k) {
            None => LaurentPoly::zero(),
            Some((sign, key)) => match self.constants.get(&key) {
                None => LaurentPoly::zero(),
                Some(v) if sign > 0 => v[t].clone(),
                Some(v) => -&v[t],
            },
        }
    }

    fn check_dim(&self, v: &Vector) -> Result<(), TrisysError> {
        if v.dim() == self.dim {
            Ok(())
        } else {
            Err(TrisysError::DimensionMismatch { expected: self.dim, found: v.dim() })
        }
    }

    /// Trilinear bracket. Each stored triple contributes the 3×3 minor of
    /// the argument coordinates at its indices.
    pub fn bracket(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, TrisysError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        let mut out = Vector::zero(self.dim);
        for (&[i, j, k], value) in &self.constants {
            let minor = minor3(x, y, z, i, j, k);
            out.add_scaled(&minor, value);
        }
        Ok(out)
    }

    /// True when the bracket vanishes identically.
    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }
}

/// Determinant of the rows `i, j, k` of the column matrix `[x | y | z]`.
pub(crate) fn minor3(x: &Vector, y: &Vector, z: &Vector, i: usize, j: usize, k: usize) -> LaurentPoly {
    let term = |a: &Vector, b: &Vector, c: &Vector| -> LaurentPoly {
        if a[i].is_zero() {
            return LaurentPoly::zero();
        }
        let m = &(&b[j] * &c[k]) - &(&b[k] * &c[j]);
        if m.is_zero() {
            m
        } else {
            &a[i] * &m
        }
    };
    // expansion along the first index with the cofactor signs folded in
    let mut out = term(x, y, z);
    out += &term(y, z, x);
    out += &term(z, x, y);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Vector {
        Vector::basis(3, i)
    }

    #[test]
    fn a3_brackets() {
        let a = TriAlgebra::a3();
        assert_eq!(a.bracket(&e(0), &e(1), &e(2)).unwrap(), e(0));
        assert!(a.bracket(&e(0), &e(0), &e(2)).unwrap().is_zero());
        assert_eq!(a.bracket(&e(1), &e(0), &e(2)).unwrap(), e(0).neg());
    }

    #[test]
    fn sort3_signs() {
        assert_eq!(sort3(0, 1, 2), Some((1, [0, 1, 2])));
        assert_eq!(sort3(1, 0, 2), Some((-1, [0, 1, 2])));
        assert_eq!(sort3(2, 0, 1), Some((1, [0, 1, 2])));
        assert_eq!(sort3(2, 1, 0), Some((-1, [0, 1, 2])));
        assert_eq!(sort3(1, 1, 0), None);
    }

    #[test]
    fn set_bracket_validates() {
        let mut a = TriAlgebra::zero(3);
        assert_eq!(a.set_bracket(0, 0, 1, e(0)), Err(TrisysError::RepeatedIndex));
        assert!(matches!(a.set_bracket(0, 1, 3, e(0)), Err(TrisysError::IndexOutOfRange { .. })));
        a.set_bracket(2, 1, 0, e(0)).unwrap();
        assert_eq!(a.basis_bracket(0, 1, 2), e(0).neg());
    }

    #[test]
    fn dimension_mismatch() {
        let a = TriAlgebra::a3();
        assert!(matches!(
            a.bracket(&e(0), &e(1), &Vector::basis(4, 2)),
            Err(TrisysError::DimensionMismatch { expected: 3, found: 4 })
        ));
    }
}
