use super::CybeError;
use crate::ooperator::ParamOperator;
use crate::trisys::{coadjoint_rep, semidirect_unchecked, TriAlgebra, TwoTensor};

/// `A ⋉_{ad*} A*` with `e_i` at index `i` and `e_i*` at index `n + i`.
pub fn coadjoint_double(a: &TriAlgebra) -> TriAlgebra {
    semidirect_unchecked(a, &coadjoint_rep(a), "*")
}

/// `r = T̄ − σ₁₂(T̄)` with `T̄ = Σ_i e_i* ⊗ Te_i`, as a tensor on the
/// coadjoint double of the operator's domain.
///
/// `a` must have dimension `2n` for an `n×n` operator, with basis names
/// `e_i*` in the second half matching `e_i` in the first.
pub fn tensor_from_operator(a: &TriAlgebra, t: &ParamOperator) -> Result<TwoTensor, CybeError> {
    let n = t.source_dim();
    if !t.is_square() || a.dim() != 2 * n {
        return Err(CybeError::DimensionMismatch { expected: a.dim(), found: 2 * n });
    }
    let names = a.basis_names();
    if (0..n).any(|i| names[n + i] != format!("{}*", names[i])) {
        return Err(CybeError::IndexConvention(names.join(",")));
    }
    Ok(tensor_from_rows(n, |i, m| t.entry(i, m).clone()))
}

pub(crate) fn tensor_from_rows(n: usize, entry: impl Fn(usize, usize) -> crate::scalar::LaurentPoly) -> TwoTensor {
    let mut r = TwoTensor::zero(2 * n);
    for i in 0..n {
        for m in 0..n {
            let c = entry(i, m);
            if !c.is_zero() {
                *r.coeff_mut(n + i, m) += &c;
                *r.coeff_mut(m, n + i) -= &c;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cybe::yang_baxter_bracket;
    use crate::ooperator::family;
    use crate::scalar::poly;

    #[test]
    fn zero_operator_gives_zero_tensor() {
        let d = coadjoint_double(&TriAlgebra::a3());
        assert!(tensor_from_operator(&d, &ParamOperator::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn o1_tensor_layout() {
        let d = coadjoint_double(&TriAlgebra::a3());
        let r = tensor_from_operator(&d, &family("O1").unwrap().operator).unwrap();
        assert!(r.is_skew_symmetric());
        assert_eq!(*r.coeff(4, 0), poly("a21"));
        assert_eq!(*r.coeff(0, 4), poly("-a21"));
        assert!(r.coeff(3, 0).is_zero());
    }

    #[test]
    fn identity_operator_is_not_a_solution() {
        let d = coadjoint_double(&TriAlgebra::a3());
        let r = tensor_from_operator(&d, &ParamOperator::identity(3)).unwrap();
        assert!(!yang_baxter_bracket(&d, &r).unwrap().is_zero());
    }

    #[test]
    fn wrong_algebra_is_rejected() {
        assert!(tensor_from_operator(&TriAlgebra::a3(), &ParamOperator::zero(3)).is_err());
        let mut names: Vec<String> = (1..=6).map(|i| format!("x{i}")).collect();
        names.truncate(6);
        assert!(matches!(
            tensor_from_operator(&TriAlgebra::with_names(names), &ParamOperator::zero(3)),
            Err(CybeError::IndexConvention(_))
        ));
    }
}
