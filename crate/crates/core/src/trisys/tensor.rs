use crate::scalar::LaurentPoly;

/// Element of `A ⊗ A`: `coeff(i, j)` is the coefficient of `e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTensor {
    dim: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TwoTensor {
    pub fn zero(dim: usize) -> Self {
        TwoTensor {
            dim,
            coeffs: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "tensor must be square");
        TwoTensor {
            dim,
            coeffs: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.coeffs[i * self.dim + j]
    }

    pub fn coeff_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly {
        &mut self.coeffs[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.coeffs.chunks(self.dim.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Swaps the tensor factors.
    pub fn transpose(&self) -> TwoTensor {
        let mut t = TwoTensor::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *t.coeff_mut(j, i) = self.coeff(i, j).clone();
            }
        }
        t
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| (self.coeff(i, j) + self.coeff(j, i)).is_zero()))
    }

    pub fn scale(&self, c: &LaurentPoly) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    pub fn sub(&self, other: &TwoTensor) -> TwoTensor {
        assert_eq!(self.dim, other.dim);
        TwoTensor {
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    /// Nonzero slots `(i, j, coeff)` in row-major order.
    pub fn nonzero(&self) -> Vec<(usize, usize, &LaurentPoly)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = self.coeff(i, j);
                if !c.is_zero() {
                    out.push((i, j, c));
                }
            }
        }
        out
    }
}

/// Element of `A ⊗ A ⊗ A ⊗ A`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourTensor {
    dim: usize,
    coeffs: Vec<LaurentPoly>,
}

impl FourTensor {
    pub fn zero(dim: usize) -> Self {
        FourTensor {
            dim,
            coeffs: vec![LaurentPoly::zero(); dim.pow(4)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, idx: [usize; 4]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn coeff(&self, idx: [usize; 4]) -> &LaurentPoly {
        &self.coeffs[self.offset(idx)]
    }

    pub fn coeff_mut(&mut self, idx: [usize; 4]) -> &mut LaurentPoly {
        let o = self.offset(idx);
        &mut self.coeffs[o]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn add_assign(&mut self, other: &FourTensor) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> FourTensor {
        FourTensor {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    /// Nonzero slots in lexicographic index order.
    pub fn nonzero(&self) -> Vec<([usize; 4], &LaurentPoly)> {
        let n = self.dim;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(o, c)| ([o / (n * n * n), (o / (n * n)) % n, (o / n) % n, o % n], c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_and_transpose() {
        let mut r = TwoTensor::zero(3);
        *r.coeff_mut(0, 1) = LaurentPoly::one();
        assert!(!r.is_skew_symmetric());
        assert_eq!(r.transpose().coeff(1, 0), &LaurentPoly::one());
        let skew = r.sub(&r.transpose());
        assert!(skew.is_skew_symmetric());
        assert_eq!(skew.nonzero().len(), 2);
    }

    #[test]
    fn four_tensor_indexing() {
        let mut t = FourTensor::zero(3);
        assert_eq!(t.len(), 81);
        *t.coeff_mut([2, 0, 1, 2]) = LaurentPoly::int(5);
        assert_eq!(t.nonzero(), vec![([2, 0, 1, 2], &LaurentPoly::int(5))]);
    }
}
