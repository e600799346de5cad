use std::collections::BTreeMap;

use super::PreLieError;
use crate::scalar::LaurentPoly;
use crate::trisys::{TriAlgebra, Vector};

/// A ternary product skew in its first two slots, stored on keys
/// `(i, j, k)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    constants: BTreeMap<[usize; 3], Vector>,
}

impl PreLieAlgebra {
    pub fn zero(dim: usize) -> Self {
        Self::with_names((1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn with_names(basis_names: Vec<String>) -> Self {
        PreLieAlgebra { dim: basis_names.len(), basis_names, constants: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Nonzero products keyed by `(i, j, k)` with `i < j`.
    pub fn constants(&self) -> &BTreeMap<[usize; 3], Vector> {
        &self.constants
    }

    /// Sets `{e_i, e_j, e_k} = value`; `i > j` stores the negated value.
    pub fn set_product(&mut self, i: usize, j: usize, k: usize, value: Vector) -> Result<(), PreLieError> {
        for idx in [i, j, k] {
            if idx >= self.dim {
                return Err(PreLieError::IndexOutOfRange { index: idx + 1, dim: self.dim });
            }
        }
        if value.dim() != self.dim {
            return Err(PreLieError::DimensionMismatch { expected: self.dim, found: value.dim() });
        }
        if i == j {
            return Err(PreLieError::RepeatedIndex);
        }
        let (key, value) = if i < j { ([i, j, k], value) } else { ([j, i, k], value.neg()) };
        if value.is_zero() {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, value);
        }
        Ok(())
    }

    pub fn basis_product(&self, i: usize, j: usize, k: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vector::zero(self.dim),
            std::cmp::Ordering::Less => self.constants.get(&[i, j, k]).cloned().unwrap_or_else(|| Vector::zero(self.dim)),
            std::cmp::Ordering::Greater => {
                self.constants.get(&[j, i, k]).map(Vector::neg).unwrap_or_else(|| Vector::zero(self.dim))
            }
        }
    }

    /// C_{ijk}^t.
    pub fn constant(&self, i: usize, j: usize, k: usize, t: usize) -> LaurentPoly {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => LaurentPoly::zero(),
            std::cmp::Ordering::Less => self.constants.get(&[i, j, k]).map(|v| v[t].clone()).unwrap_or_default(),
            std::cmp::Ordering::Greater => {
                self.constants.get(&[j, i, k]).map(|v| -&v[t]).unwrap_or_default()
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    fn check_dim(&self, v: &Vector) -> Result<(), PreLieError> {
        if v.dim() == self.dim {
            Ok(())
        } else {
            Err(PreLieError::DimensionMismatch { expected: self.dim, found: v.dim() })
        }
    }

    /// `{x, y, z}` by trilinear extension.
    pub fn product(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, PreLieError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        let mut out = Vector::zero(self.dim);
        for (&[i, j, k], value) in &self.constants {
            if z[k].is_zero() {
                continue;
            }
            let m = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !m.is_zero() {
                out.add_scaled(&(&m * &z[k]), value);
            }
        }
        Ok(out)
    }

    /// Instantiates parameters in every constant.
    pub fn substitute(&self, sigma: &crate::scalar::Assignment) -> Result<PreLieAlgebra, crate::scalar::ScalarError> {
        let mut out = PreLieAlgebra::with_names(self.basis_names.clone());
        for (key, v) in &self.constants {
            let v = Vector::new(v.coords().iter().map(|p| p.substitute_partial(sigma)).collect::<Result<_, _>>()?);
            if !v.is_zero() {
                out.constants.insert(*key, v);
            }
        }
        Ok(out)
    }
}

/// `[x,y,z]^c = {x,y,z} + {y,z,x} + {z,x,y}` as a 3-Lie bracket on the
/// same space.
pub fn sub_adjacent(p: &PreLieAlgebra) -> TriAlgebra {
    let n = p.dim();
    let mut out = TriAlgebra::with_names(p.basis_names().to_vec());
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = p.basis_product(i, j, k).add(&p.basis_product(j, k, i)).add(&p.basis_product(k, i, j));
                out.set_bracket(i, j, k, v).expect("distinct indices in range");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_in_first_two_slots() {
        let mut p = PreLieAlgebra::zero(3);
        p.set_product(2, 1, 0, Vector::from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(p.basis_product(1, 2, 0), Vector::from_ints(&[-1, 0, 0]));
        assert_eq!(p.constant(2, 1, 0, 0), LaurentPoly::int(1));
        assert!(p.basis_product(1, 1, 0).is_zero());
        assert_eq!(p.set_product(1, 1, 0, Vector::zero(3)), Err(PreLieError::RepeatedIndex));
    }

    #[test]
    fn product_extends_trilinearly() {
        let mut p = PreLieAlgebra::zero(2);
        p.set_product(0, 1, 1, Vector::from_ints(&[1, 2])).unwrap();
        let x = Vector::from_ints(&[1, 1]);
        let y = Vector::from_ints(&[0, 3]);
        let z = Vector::from_ints(&[5, 2]);
        // (1*3 - 1*0) * 2 * (1, 2)
        assert_eq!(p.product(&x, &y, &z).unwrap(), Vector::from_ints(&[6, 12]));
        assert!(p.product(&x, &x, &z).unwrap().is_zero());
    }

    #[test]
    fn sub_adjacent_of_zero_and_dim2() {
        assert!(sub_adjacent(&PreLieAlgebra::zero(3)).is_abelian());
        let mut p = PreLieAlgebra::zero(2);
        p.set_product(0, 1, 0, Vector::from_ints(&[3, 1])).unwrap();
        assert!(sub_adjacent(&p).is_abelian());
    }
}
