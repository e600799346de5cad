use super::{OperatorError, ParamOperator};
use crate::scalar::LaurentPoly;
use crate::trisys::{Representation, TriAlgebra, Vector};

/// A basis triple `i<j<k` on which the operator identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OViolation {
    /// 0-based.
    pub triple: [usize; 3],
    /// `T([Te_i,Te_j,e_k] + [Te_k,Te_i,e_j] + [Te_j,Te_k,e_i]) − [Te_i,Te_j,Te_k]`.
    pub residual: Vector,
}

fn check_square(a: &TriAlgebra, t: &ParamOperator) -> Result<(), OperatorError> {
    if !t.is_square() {
        return Err(OperatorError::NotSquare { rows: t.source_dim(), cols: t.target_dim() });
    }
    if t.source_dim() != a.dim() {
        return Err(OperatorError::DimensionMismatch { expected: a.dim(), found: t.source_dim() });
    }
    Ok(())
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
}

/// Residual of the operator identity on one basis triple, by evaluating
/// brackets of images.
pub fn o_residual_direct(a: &TriAlgebra, t: &ParamOperator, [i, j, k]: [usize; 3]) -> Vector {
    let n = a.dim();
    let br = |x: &Vector, y: &Vector, z: &Vector| a.bracket(x, y, z).expect("checked dimensions");
    let (ti, tj, tk) = (t.image(i), t.image(j), t.image(k));
    let lhs = br(&ti, &tj, &tk);
    let mut inner = br(&ti, &tj, &Vector::basis(n, k));
    inner = inner.add(&br(&tk, &ti, &Vector::basis(n, j)));
    inner = inner.add(&br(&tj, &tk, &Vector::basis(n, i)));
    t.apply(&inner).sub(&lhs)
}

/// Checks the operator identity on every basis triple `i<j<k`; by
/// trilinearity and skew-symmetry that is enough.
pub fn check_o_operator_direct(a: &TriAlgebra, t: &ParamOperator) -> Result<Vec<OViolation>, OperatorError> {
    check_square(a, t)?;
    Ok(triples(a.dim())
        .filter_map(|triple| {
            let residual = o_residual_direct(a, t, triple);
            (!residual.is_zero()).then_some(OViolation { triple, residual })
        })
        .collect())
}

/// Residual on one triple from the four-index structure-constant sum
///
/// `Σ_{s,v,t} a_it a_js a_kv C_tsv^m − a_iv a_js a_tm C_vsk^t − a_kv a_is a_tm C_vsj^t − a_js a_kv a_tm C_svi^t`
///
/// for each output coordinate `m`, negated to match the orientation of
/// [`o_residual_direct`].
pub fn o_residual_expanded(a: &TriAlgebra, op: &ParamOperator, [i, j, k]: [usize; 3]) -> Vector {
    let n = a.dim();
    let x = |r: usize, c: usize| op.entry(r, c);
    let c = |p: usize, q: usize, r: usize, t: usize| a.constant(p, q, r, t);
    let mut out = Vector::zero(n);
    for m in 0..n {
        let mut acc = LaurentPoly::zero();
        for s in 0..n {
            for v in 0..n {
                for t in 0..n {
                    let c1 = c(t, s, v, m);
                    if !c1.is_zero() {
                        acc += &(&(&(x(i, t) * x(j, s)) * x(k, v)) * &c1);
                    }
                    let c2 = c(v, s, k, t);
                    if !c2.is_zero() {
                        acc -= &(&(&(x(i, v) * x(j, s)) * x(t, m)) * &c2);
                    }
                    let c3 = c(v, s, j, t);
                    if !c3.is_zero() {
                        acc -= &(&(&(x(k, v) * x(i, s)) * x(t, m)) * &c3);
                    }
                    let c4 = c(s, v, i, t);
                    if !c4.is_zero() {
                        acc -= &(&(&(x(j, s) * x(k, v)) * x(t, m)) * &c4);
                    }
                }
            }
        }
        out[m] = -acc;
    }
    out
}

/// Same contract as [`check_o_operator_direct`], computed through the
/// expanded structure-constant sums.
pub fn check_o_operator_expanded(a: &TriAlgebra, t: &ParamOperator) -> Result<Vec<OViolation>, OperatorError> {
    check_square(a, t)?;
    Ok(triples(a.dim())
        .filter_map(|triple| {
            let residual = o_residual_expanded(a, t, triple);
            (!residual.is_zero()).then_some(OViolation { triple, residual })
        })
        .collect())
}

/// Operator identity relative to a representation: `T` maps the carrier
/// `V` into `A` (row `i` = `T(v_i)`), and the residual on carrier triples is
/// `T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v) − [Tu,Tv,Tw]`.
pub fn check_o_operator_rep(
    a: &TriAlgebra,
    rho: &Representation,
    t: &ParamOperator,
) -> Result<Vec<OViolation>, OperatorError> {
    if rho.algebra_dim() != a.dim() {
        return Err(OperatorError::DimensionMismatch { expected: a.dim(), found: rho.algebra_dim() });
    }
    if t.source_dim() != rho.carrier_dim() || t.target_dim() != a.dim() {
        return Err(OperatorError::DimensionMismatch { expected: rho.carrier_dim(), found: t.source_dim() });
    }
    let m = rho.carrier_dim();
    let mut out = Vec::new();
    for triple in triples(m) {
        let [i, j, k] = triple;
        let (ti, tj, tk) = (t.image(i), t.image(j), t.image(k));
        let lhs = a.bracket(&ti, &tj, &tk)?;
        let act = |x: &Vector, y: &Vector, w: usize| -> Result<Vector, OperatorError> {
            Ok(rho.action(x, y)?.apply(&Vector::basis(m, w)))
        };
        let inner = act(&ti, &tj, k)?.add(&act(&tj, &tk, i)?).add(&act(&tk, &ti, j)?);
        let residual = t.apply(&inner).sub(&lhs);
        if !residual.is_zero() {
            out.push(OViolation { triple, residual });
        }
    }
    Ok(out)
}

/// The three cubic conditions on a 3×3 operator matrix for the algebra
/// `[e1,e2,e3] = e1`. They agree with the direct residual up to sign:
/// the first with the negated `e1` coordinate, the other two with the `e2`
/// and `e3` coordinates.
pub fn specialized_conditions_3d(t: &ParamOperator) -> Result<[LaurentPoly; 3], OperatorError> {
    if !t.is_square() || t.source_dim() != 3 {
        return Err(OperatorError::DimensionMismatch { expected: 3, found: t.source_dim() });
    }
    let a = |i: usize, j: usize| t.entry(i - 1, j - 1);
    let p = |x: &LaurentPoly, y: &LaurentPoly| x * y;
    let e1 = &(&(a(1, 2) * &(&(&p(a(1, 1), a(2, 1)) - &p(a(2, 1), a(3, 3))) + &p(a(2, 3), a(3, 1))))
        + &(a(1, 3) * &(&(&p(a(2, 1), a(3, 2)) + &p(a(1, 1), a(3, 1))) - &p(a(2, 2), a(3, 1)))))
        - &(&p(a(1, 1), a(1, 1)) * &(a(2, 2) + a(3, 3)));
    // the common factor of the second and third conditions
    let inner = &(&(&(&(&p(a(1, 1), a(2, 2)) - &p(a(1, 2), a(2, 1))) - &p(a(3, 1), a(1, 3)))
        + &p(a(3, 3), a(1, 1)))
        + &p(a(2, 2), a(3, 3)))
        - &p(a(2, 3), a(3, 2));
    let e2 = a(1, 2) * &inner;
    let e3 = a(1, 3) * &inner;
    Ok([e1, e2, e3])
}

/// Integer evaluation of the three cubic conditions; used as the grid
/// filter.
pub fn conditions_vanish_i64(m: &[[i64; 3]; 3]) -> bool {
    let [[a11, a12, a13], [a21, a22, a23], [a31, a32, a33]] = *m;
    let e1 = a12 * (a11 * a21 - a21 * a33 + a23 * a31) + a13 * (a21 * a32 + a11 * a31 - a22 * a31)
        - a11 * a11 * (a22 + a33);
    let inner = a11 * a22 - a12 * a21 - a31 * a13 + a33 * a11 + a22 * a33 - a23 * a32;
    e1 == 0 && a12 * inner == 0 && a13 * inner == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly;
    use crate::trisys::{adjoint_rep, coadjoint_rep};

    fn a3() -> TriAlgebra {
        TriAlgebra::a3()
    }

    #[test]
    fn zero_operator_passes() {
        assert!(check_o_operator_direct(&a3(), &ParamOperator::zero(3)).unwrap().is_empty());
    }

    // Te_i = e_i: [e1,e2,e3] = e1 against T(3 e1) = 3 e1.
    #[test]
    fn identity_residual() {
        let v = check_o_operator_direct(&a3(), &ParamOperator::identity(3)).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, [0, 1, 2]);
        assert_eq!(v[0].residual, Vector::from_ints(&[2, 0, 0]));
        assert_eq!(check_o_operator_expanded(&a3(), &ParamOperator::identity(3)).unwrap(), v);
    }

    #[test]
    fn generic_matrix_forms_agree() {
        let t = ParamOperator::generic(3);
        let direct = o_residual_direct(&a3(), &t, [0, 1, 2]);
        assert_eq!(direct, o_residual_expanded(&a3(), &t, [0, 1, 2]));
        let [e1, e2, e3] = specialized_conditions_3d(&t).unwrap();
        assert_eq!(direct[0], -e1);
        assert_eq!(direct[1], e2);
        assert_eq!(direct[2], e3);
    }

    #[test]
    fn printed_first_condition() {
        let [e1, _, _] = specialized_conditions_3d(&ParamOperator::generic(3)).unwrap();
        let printed = poly(
            "a12*(a11*a21 - a21*a33 + a23*a31) + a13*(a21*a32 + a11*a31 - a22*a31) - a11^2*(a22 + a33)",
        );
        assert_eq!(e1, printed);
    }

    #[test]
    fn adjoint_rep_form_matches_direct() {
        let t = ParamOperator::generic(3);
        let rep = check_o_operator_rep(&a3(), &adjoint_rep(&a3()), &t).unwrap();
        assert_eq!(rep, check_o_operator_direct(&a3(), &t).unwrap());
    }

    #[test]
    fn rep_form_checks_shapes() {
        let t = ParamOperator::zero(2);
        assert!(check_o_operator_rep(&a3(), &coadjoint_rep(&a3()), &t).is_err());
        assert!(check_o_operator_direct(&a3(), &t).is_err());
    }

    #[test]
    fn integer_filter_matches_symbolic() {
        let m = [[1, 0, 1], [2, 3, 4], [-1, 0, -1]];
        assert!(conditions_vanish_i64(&m));
        assert!(!conditions_vanish_i64(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
    }
}
