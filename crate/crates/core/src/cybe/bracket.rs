use super::CybeError;
use crate::par::{self, Jobs};
use crate::scalar::LaurentPoly;
use crate::trisys::{FourTensor, TriAlgebra, TwoTensor};

/// `x ⊗ y ↦ y ⊗ x`.
pub fn switch12(r: &TwoTensor) -> TwoTensor {
    r.transpose()
}

/// A tensor together with its Yang-Baxter bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YangBaxterWitness {
    pub algebra: TriAlgebra,
    pub r: TwoTensor,
    pub residual: FourTensor,
}

impl YangBaxterWitness {
    pub fn new(algebra: TriAlgebra, r: TwoTensor, jobs: Jobs) -> Result<Self, CybeError> {
        let residual = yang_baxter_bracket_with(&algebra, &r, jobs)?;
        Ok(YangBaxterWitness { algebra, r, residual })
    }

    pub fn is_solution(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn yang_baxter_bracket(a: &TriAlgebra, r: &TwoTensor) -> Result<FourTensor, CybeError> {
    yang_baxter_bracket_with(a, r, Jobs::default())
}

/// `[[r,r,r]]` with `r = Σ c_pq e_p ⊗ e_q` expanded over its nonzero
/// coefficients:
///
/// `Σ [x_i,x_j,x_k]⊗y_i⊗y_j⊗y_k + x_i⊗[y_i,x_j,x_k]⊗y_j⊗y_k
///  + x_i⊗x_j⊗[y_i,y_j,x_k]⊗y_k + x_i⊗x_j⊗x_k⊗[y_i,y_j,y_k]`.
///
/// Work is split over the first summation index; partial tensors are added
/// in index order.
pub fn yang_baxter_bracket_with(a: &TriAlgebra, r: &TwoTensor, jobs: Jobs) -> Result<FourTensor, CybeError> {
    let n = a.dim();
    if r.dim() != n {
        return Err(CybeError::DimensionMismatch { expected: n, found: r.dim() });
    }
    let terms: Vec<(usize, usize, LaurentPoly)> = r.nonzero().into_iter().map(|(p, q, c)| (p, q, c.clone())).collect();
    let mut table: Vec<Vec<(usize, LaurentPoly)>> = vec![Vec::new(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                table[(i * n + j) * n + k] = a
                    .basis_bracket(i, j, k)
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(t, v)| (t, v.clone()))
                    .collect();
            }
        }
    }
    let partials = par::map(jobs, &terms, |(p1, q1, c1)| {
        let mut out = FourTensor::zero(n);
        for (p2, q2, c2) in &terms {
            let c12 = c1 * c2;
            for (p3, q3, c3) in &terms {
                let slots = [
                    (0, [0, *q1, *q2, *q3], &table[(p1 * n + p2) * n + p3]),
                    (1, [*p1, 0, *q2, *q3], &table[(q1 * n + p2) * n + p3]),
                    (2, [*p1, *p2, 0, *q3], &table[(q1 * n + q2) * n + p3]),
                    (3, [*p1, *p2, *p3, 0], &table[(q1 * n + q2) * n + q3]),
                ];
                if slots.iter().all(|(_, _, b)| b.is_empty()) {
                    continue;
                }
                let c = &c12 * c3;
                for (slot, idx, bracket) in slots {
                    for (t, v) in bracket {
                        let mut idx = idx;
                        idx[slot] = *t;
                        *out.coeff_mut(idx) += &(&c * v);
                    }
                }
            }
        }
        out
    });
    let mut total = FourTensor::zero(n);
    for part in &partials {
        total.add_assign(part);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentPoly;

    fn e1e2_skew() -> TwoTensor {
        let mut r = TwoTensor::zero(3);
        *r.coeff_mut(0, 1) = LaurentPoly::int(1);
        *r.coeff_mut(1, 0) = LaurentPoly::int(-1);
        r
    }

    #[test]
    fn switch_is_an_involution() {
        let r = e1e2_skew();
        assert_eq!(switch12(&switch12(&r)), r);
        assert_eq!(*switch12(&r).coeff(1, 0), LaurentPoly::int(1));
    }

    #[test]
    fn zero_tensor() {
        assert!(yang_baxter_bracket(&TriAlgebra::a3(), &TwoTensor::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn dimension_is_checked() {
        assert!(yang_baxter_bracket(&TriAlgebra::a3(), &TwoTensor::zero(6)).is_err());
    }

    #[test]
    fn jobs_do_not_change_the_result() {
        let r = e1e2_skew();
        let a = TriAlgebra::a3();
        assert_eq!(
            yang_baxter_bracket_with(&a, &r, Jobs::Sequential).unwrap(),
            yang_baxter_bracket_with(&a, &r, Jobs::Threads(3)).unwrap()
        );
    }
}
