use super::{TriAlgebra, Vector};

/// A basis 5-tuple where the fundamental identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiViolation {
    /// 0-based basis indices (x1, .., x5).
    pub tuple: [usize; 5],
    /// LHS − RHS.
    pub residual: Vector,
}

/// `[x1,x2,[x3,x4,x5]] − [[x1,x2,x3],x4,x5] − [x3,[x1,x2,x4],x5] − [x3,x4,[x1,x2,x5]]`
/// on basis vectors.
pub fn fi_residual(a: &TriAlgebra, t: [usize; 5]) -> Vector {
    let n = a.dim();
    let e = |i: usize| Vector::basis(n, i);
    let br = |x: &Vector, y: &Vector, z: &Vector| a.bracket(x, y, z).expect("same algebra");
    let [x1, x2, x3, x4, x5] = t;
    let lhs = br(&e(x1), &e(x2), &a.basis_bracket(x3, x4, x5));
    let r1 = br(&a.basis_bracket(x1, x2, x3), &e(x4), &e(x5));
    let r2 = br(&e(x3), &a.basis_bracket(x1, x2, x4), &e(x5));
    let r3 = br(&e(x3), &e(x4), &a.basis_bracket(x1, x2, x5));
    lhs.sub(&r1).sub(&r2).sub(&r3)
}

/// Violations of the fundamental identity over basis 5-tuples, sorted by
/// tuple. Both sides are skew in (x1,x2) and fully skew in (x3,x4,x5), so
/// only tuples with x1<x2 and x3<x4<x5 are evaluated.
pub fn check_fundamental_identity(a: &TriAlgebra) -> Vec<FiViolation> {
    let n = a.dim();
    let mut out = Vec::new();
    if a.is_abelian() {
        return out;
    }
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for x3 in 0..n {
                for x4 in x3 + 1..n {
                    for x5 in x4 + 1..n {
                        let t = [x1, x2, x3, x4, x5];
                        let residual = fi_residual(a, t);
                        if !residual.is_zero() {
                            out.push(FiViolation { tuple: t, residual });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every basis 5-tuple, no symmetry reduction.
pub fn check_fundamental_identity_exhaustive(a: &TriAlgebra) -> Vec<FiViolation> {
    let n = a.dim();
    let mut out = Vec::new();
    let total = n.pow(5);
    for code in 0..total {
        let mut c = code;
        let mut t = [0usize; 5];
        for slot in t.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        let residual = fi_residual(a, t);
        if !residual.is_zero() {
            out.push(FiViolation { tuple: t, residual });
        }
    }
    out
}

/// Evaluates the identity on arbitrary vectors.
pub fn fi_residual_vectors(a: &TriAlgebra, x: [&Vector; 5]) -> Vector {
    let br = |p: &Vector, q: &Vector, r: &Vector| a.bracket(p, q, r).expect("same algebra");
    let [x1, x2, x3, x4, x5] = x;
    let lhs = br(x1, x2, &br(x3, x4, x5));
    let r1 = br(&br(x1, x2, x3), x4, x5);
    let r2 = br(x3, &br(x1, x2, x4), x5);
    let r3 = br(x3, x4, &br(x1, x2, x5));
    lhs.sub(&r1).sub(&r2).sub(&r3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_satisfies_fi() {
        assert!(check_fundamental_identity(&TriAlgebra::a3()).is_empty());
        assert!(check_fundamental_identity_exhaustive(&TriAlgebra::a3()).is_empty());
    }

    #[test]
    fn zero_bracket_satisfies_fi() {
        for n in 0..6 {
            assert!(check_fundamental_identity(&TriAlgebra::zero(n)).is_empty());
        }
    }

    // [e1,e2,e3] = e4, [e1,e2,e4] = e3. An independent termwise expansion
    // over all 4^5 basis tuples finds no violation.
    #[test]
    fn dim4_example_from_direct_expansion() {
        let mut a = TriAlgebra::zero(4);
        a.set_bracket(0, 1, 2, Vector::from_ints(&[0, 0, 0, 1])).unwrap();
        a.set_bracket(0, 1, 3, Vector::from_ints(&[0, 0, 1, 0])).unwrap();
        assert!(check_fundamental_identity(&a).is_empty());
        assert!(check_fundamental_identity_exhaustive(&a).is_empty());
    }

    #[test]
    fn non_lie_bracket_is_reported() {
        // [e1,e2,e3] = e1, [e2,e3,e4] = e1 + e2 on dim 4 is not 3-Lie
        let mut a = TriAlgebra::zero(4);
        a.set_bracket(0, 1, 2, Vector::from_ints(&[1, 0, 0, 0])).unwrap();
        a.set_bracket(1, 2, 3, Vector::from_ints(&[1, 1, 0, 0])).unwrap();
        let v = check_fundamental_identity(&a);
        assert!(!v.is_empty());
        // independent termwise expansion: 36 failing tuples out of 4^5
        assert_eq!(check_fundamental_identity_exhaustive(&a).len(), 36);
        assert!(v.windows(2).all(|w| w[0].tuple < w[1].tuple));
    }
}
