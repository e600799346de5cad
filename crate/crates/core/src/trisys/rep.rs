use std::collections::BTreeMap;

use super::{Matrix, TriAlgebra, TrisysError, Vector};
use crate::scalar::LaurentPoly;

/// A skew-symmetric pair action `ρ(e_i, e_j)` of a 3-Lie algebra on a
/// carrier space, stored on increasing pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra_dim: usize,
    carrier_dim: usize,
    action: BTreeMap<[usize; 2], Matrix>,
}

impl Representation {
    pub fn zero(algebra_dim: usize, carrier_dim: usize) -> Self {
        Representation {
            algebra_dim,
            carrier_dim,
            action: BTreeMap::new(),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn actions(&self) -> &BTreeMap<[usize; 2], Matrix> {
        &self.action
    }

    /// Sets `ρ(e_i, e_j) = m`; the reversed pair gets `-m` implicitly.
    pub fn set_action(&mut self, i: usize, j: usize, m: Matrix) -> Result<(), TrisysError> {
        if i == j {
            return Err(TrisysError::RepeatedIndex);
        }
        for idx in [i, j] {
            if idx >= self.algebra_dim {
                return Err(TrisysError::IndexOutOfRange { index: idx + 1, dim: self.algebra_dim });
            }
        }
        if m.rows() != self.carrier_dim || m.cols() != self.carrier_dim {
            return Err(TrisysError::DimensionMismatch { expected: self.carrier_dim, found: m.rows() });
        }
        let (key, m) = if i < j { ([i, j], m) } else { ([j, i], m.neg()) };
        if m.is_zero() {
            self.action.remove(&key);
        } else {
            self.action.insert(key, m);
        }
        Ok(())
    }

    /// `ρ(e_i, e_j)` for arbitrary indices.
    pub fn basis_action(&self, i: usize, j: usize) -> Matrix {
        let zero = || Matrix::zero(self.carrier_dim, self.carrier_dim);
        if i == j {
            return zero();
        }
        let (key, flip) = if i < j { ([i, j], false) } else { ([j, i], true) };
        match self.action.get(&key) {
            None => zero(),
            Some(m) if flip => m.neg(),
            Some(m) => m.clone(),
        }
    }

    /// `ρ(x, y)` as a matrix, by bilinearity.
    pub fn action(&self, x: &Vector, y: &Vector) -> Result<Matrix, TrisysError> {
        for v in [x, y] {
            if v.dim() != self.algebra_dim {
                return Err(TrisysError::DimensionMismatch { expected: self.algebra_dim, found: v.dim() });
            }
        }
        let mut out = Matrix::zero(self.carrier_dim, self.carrier_dim);
        for (&[i, j], m) in &self.action {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !c.is_zero() {
                out = out.add(&m.scale(&c));
            }
        }
        Ok(out)
    }

    /// The dual representation on the carrier's dual space:
    /// `ρ*(x, y) = −ρ(x, y)ᵀ` in the dual basis.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra_dim: self.algebra_dim,
            carrier_dim: self.carrier_dim,
            action: self
                .action
                .iter()
                .map(|(k, m)| (*k, m.transpose().neg()))
                .collect(),
        }
    }
}

/// `ad(e_i, e_j) e_k = [e_i, e_j, e_k]`.
pub fn adjoint_rep(a: &TriAlgebra) -> Representation {
    let n = a.dim();
    let mut rep = Representation::zero(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zero(n, n);
            for k in 0..n {
                let col = a.basis_bracket(i, j, k);
                for t in 0..n {
                    m[(t, k)] = col[t].clone();
                }
            }
            rep.set_action(i, j, m).expect("indices in range");
        }
    }
    rep
}

/// The dual of the adjoint representation.
pub fn coadjoint_rep(a: &TriAlgebra) -> Representation {
    adjoint_rep(a).dual()
}

/// Which representation axiom a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepAxiom {
    /// ρ(x1,x2)ρ(x3,x4) − ρ(x3,x4)ρ(x1,x2) = ρ([x1,x2,x3],x4) − ρ([x1,x2,x4],x3)
    Commutator,
    /// ρ([x1,x2,x3],x4) = ρ(x1,x2)ρ(x3,x4) + ρ(x2,x3)ρ(x1,x4) + ρ(x3,x1)ρ(x2,x4)
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepViolation {
    pub axiom: RepAxiom,
    /// 0-based basis indices.
    pub tuple: [usize; 4],
    pub residual: Matrix,
}

fn rep_residual(a: &TriAlgebra, rho: &Representation, axiom: RepAxiom, t: [usize; 4]) -> Matrix {
    let n = a.dim();
    let e = |i: usize| Vector::basis(n, i);
    let r = |i: usize, j: usize| rho.basis_action(i, j);
    let r_of = |v: &Vector, j: usize| rho.action(v, &e(j)).expect("dims checked");
    let [x1, x2, x3, x4] = t;
    match axiom {
        RepAxiom::Commutator => {
            let lhs = r(x1, x2).mul(&r(x3, x4)).sub(&r(x3, x4).mul(&r(x1, x2)));
            let rhs = r_of(&a.basis_bracket(x1, x2, x3), x4).sub(&r_of(&a.basis_bracket(x1, x2, x4), x3));
            lhs.sub(&rhs)
        }
        RepAxiom::Bracket => {
            let lhs = r_of(&a.basis_bracket(x1, x2, x3), x4);
            let rhs = r(x1, x2)
                .mul(&r(x3, x4))
                .add(&r(x2, x3).mul(&r(x1, x4)))
                .add(&r(x3, x1).mul(&r(x2, x4)));
            lhs.sub(&rhs)
        }
    }
}

/// Checks both representation axioms on basis 4-tuples.
///
/// The commutator axiom is skew in (x1,x2) and in (x3,x4); the bracket
/// axiom is fully skew in (x1,x2,x3). Only tuples increasing in those slots
/// are evaluated.
pub fn check_representation(a: &TriAlgebra, rho: &Representation) -> Result<Vec<RepViolation>, TrisysError> {
    if rho.algebra_dim() != a.dim() {
        return Err(TrisysError::DimensionMismatch { expected: a.dim(), found: rho.algebra_dim() });
    }
    let n = a.dim();
    let mut out = Vec::new();
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for x3 in 0..n {
                for x4 in x3 + 1..n {
                    let t = [x1, x2, x3, x4];
                    let res = rep_residual(a, rho, RepAxiom::Commutator, t);
                    if !res.is_zero() {
                        out.push(RepViolation { axiom: RepAxiom::Commutator, tuple: t, residual: res });
                    }
                }
            }
        }
    }
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for x3 in x2 + 1..n {
                for x4 in 0..n {
                    let t = [x1, x2, x3, x4];
                    let res = rep_residual(a, rho, RepAxiom::Bracket, t);
                    if !res.is_zero() {
                        out.push(RepViolation { axiom: RepAxiom::Bracket, tuple: t, residual: res });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Same check over every basis 4-tuple, with no symmetry reduction.
pub fn check_representation_exhaustive(a: &TriAlgebra, rho: &Representation) -> Vec<RepViolation> {
    let n = a.dim();
    let mut out = Vec::new();
    for axiom in [RepAxiom::Commutator, RepAxiom::Bracket] {
        for x1 in 0..n {
            for x2 in 0..n {
                for x3 in 0..n {
                    for x4 in 0..n {
                        let t = [x1, x2, x3, x4];
                        let res = rep_residual(a, rho, axiom, t);
                        if !res.is_zero() {
                            out.push(RepViolation { axiom, tuple: t, residual: res });
                        }
                    }
                }
            }
        }
    }
    out
}

/// The semidirect product `A ⋉_ρ V` on `A ⊕ V`, with the carrier basis
/// appended after the basis of `A`:
/// `[x1+v1, x2+v2, x3+v3] = [x1,x2,x3] + ρ(x1,x2)v3 + ρ(x3,x1)v2 + ρ(x2,x3)v1`.
pub fn semidirect(a: &TriAlgebra, rho: &Representation) -> Result<TriAlgebra, TrisysError> {
    let violations = check_representation(a, rho)?;
    if !violations.is_empty() {
        return Err(TrisysError::NotARepresentation(violations.len()));
    }
    Ok(semidirect_unchecked(a, rho, "*"))
}

/// Builds the semidirect product without checking the representation
/// axioms. Carrier basis vectors are named after `A`'s basis with `suffix`.
pub fn semidirect_unchecked(a: &TriAlgebra, rho: &Representation, suffix: &str) -> TriAlgebra {
    let n = a.dim();
    let m = rho.carrier_dim();
    let mut names: Vec<String> = a.basis_names().to_vec();
    if m == n {
        names.extend(a.basis_names().iter().map(|s| format!("{s}{suffix}")));
    } else {
        names.extend((1..=m).map(|i| format!("f{i}")));
    }
    let mut out = TriAlgebra::with_names(names);
    for (&[i, j, k], v) in a.constants() {
        let mut w = v.coords().to_vec();
        w.extend(std::iter::repeat_n(LaurentPoly::zero(), m));
        out.set_bracket(i, j, k, Vector::new(w)).expect("indices in range");
    }
    // exactly one carrier index: [e_i, e_j, f_c] = ρ(e_i, e_j) f_c
    for (&[i, j], mat) in rho.actions() {
        for c in 0..m {
            let mut w = vec![LaurentPoly::zero(); n];
            w.extend((0..m).map(|r| mat[(r, c)].clone()));
            out.set_bracket(i, j, n + c, Vector::new(w)).expect("indices in range");
        }
    }
    out
}
