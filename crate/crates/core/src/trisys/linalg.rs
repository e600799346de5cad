use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::{render, Assignment, LaurentPoly, Scalar, ScalarError};

/// Coordinates of an element in a fixed basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector(Vec<LaurentPoly>);

impl Vector {
    pub fn new(coords: Vec<LaurentPoly>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![LaurentPoly::zero(); dim])
    }

    /// The `i`-th basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = LaurentPoly::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| LaurentPoly::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[LaurentPoly] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// `self += c·other`, skipping zero work.
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn substitute(&self, sigma: &Assignment) -> Result<Vector, ScalarError> {
        self.0
            .iter()
            .map(|p| p.substitute(sigma).map(LaurentPoly::constant))
            .collect::<Result<_, _>>()
            .map(Vector)
    }

    pub fn scalars(&self) -> Option<Vec<Scalar>> {
        self.0.iter().map(LaurentPoly::as_constant).collect()
    }
}

impl Index<usize> for Vector {
    type Output = LaurentPoly;
    fn index(&self, i: usize) -> &LaurentPoly {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut LaurentPoly {
        &mut self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&render(p))?;
        }
        f.write_str("]")
    }
}

/// Dense matrix over Laurent polynomials. Column `c` holds the image of the
/// `c`-th basis vector, so `apply` is the usual matrix-vector product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| -p).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim());
        let mut out = Vector::zero(self.rows);
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    out[r] += &(a * &v[c]);
                }
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = LaurentPoly;
    fn index(&self, (r, c): (usize, usize)) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&render(&self[(r, c)]))?;
            }
        }
        f.write_str("]")
    }
}
