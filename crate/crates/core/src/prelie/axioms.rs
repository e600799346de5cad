use super::PreLieAlgebra;
use crate::scalar::LaurentPoly;
use crate::trisys::Vector;

/// The two identities a 3-Pre-Lie product must satisfy beyond skew-symmetry
/// in its first two slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PreLieAxiom {
    /// `{x1,x2,{x3,x4,x5}} = {[x1,x2,x3]^c,x4,x5} + {x3,[x1,x2,x4]^c,x5} + {x3,x4,{x1,x2,x5}}`
    Derivation,
    /// `{[x1,x2,x3]^c,x4,x5} = {x1,x2,{x3,x4,x5}} + {x2,x3,{x1,x4,x5}} + {x3,x1,{x2,x4,x5}}`
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieViolation {
    pub axiom: PreLieAxiom,
    /// 0-based basis indices (x1, .., x5).
    pub tuple: [usize; 5],
    /// Left side minus right side.
    pub residual: Vector,
}

struct Eval<'a> {
    p: &'a PreLieAlgebra,
    n: usize,
}

impl Eval<'_> {
    fn e(&self, i: usize) -> Vector {
        Vector::basis(self.n, i)
    }

    fn pr(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.p.product(x, y, z).expect("same dimension")
    }

    fn c(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.pr(x, y, z).add(&self.pr(y, z, x)).add(&self.pr(z, x, y))
    }

    fn derivation(&self, [x1, x2, x3, x4, x5]: [usize; 5]) -> Vector {
        let (e1, e2, e3, e4, e5) = (self.e(x1), self.e(x2), self.e(x3), self.e(x4), self.e(x5));
        let lhs = self.pr(&e1, &e2, &self.p.basis_product(x3, x4, x5));
        let r1 = self.pr(&self.c(&e1, &e2, &e3), &e4, &e5);
        let r2 = self.pr(&e3, &self.c(&e1, &e2, &e4), &e5);
        let r3 = self.pr(&e3, &e4, &self.p.basis_product(x1, x2, x5));
        lhs.sub(&r1).sub(&r2).sub(&r3)
    }

    fn cyclic(&self, [x1, x2, x3, x4, x5]: [usize; 5]) -> Vector {
        let (e1, e2, e3, e4, e5) = (self.e(x1), self.e(x2), self.e(x3), self.e(x4), self.e(x5));
        let lhs = self.pr(&self.c(&e1, &e2, &e3), &e4, &e5);
        let r1 = self.pr(&e1, &e2, &self.p.basis_product(x3, x4, x5));
        let r2 = self.pr(&e2, &e3, &self.p.basis_product(x1, x4, x5));
        let r3 = self.pr(&e3, &e1, &self.p.basis_product(x2, x4, x5));
        lhs.sub(&r1).sub(&r2).sub(&r3)
    }
}

/// Residual of one axiom on one basis tuple.
pub fn pre_lie_residual(p: &PreLieAlgebra, axiom: PreLieAxiom, tuple: [usize; 5]) -> Vector {
    let ev = Eval { p, n: p.dim() };
    match axiom {
        PreLieAxiom::Derivation => ev.derivation(tuple),
        PreLieAxiom::Cyclic => ev.cyclic(tuple),
    }
}

fn all_tuples(n: usize) -> impl Iterator<Item = [usize; 5]> {
    (0..n.pow(5)).map(move |mut c| {
        let mut t = [0usize; 5];
        for slot in t.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        t
    })
}

/// Checks both axioms on basis tuples. The first axiom is skew in
/// `(x1,x2)` and in `(x3,x4)`; the second is fully skew in `(x1,x2,x3)`.
/// Only tuples increasing in those slots are evaluated. Violations are
/// sorted by axiom, then tuple.
pub fn check_pre_lie_axioms(p: &PreLieAlgebra) -> Vec<PreLieViolation> {
    let n = p.dim();
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    let ev = Eval { p, n };
    for t in all_tuples(n) {
        let [x1, x2, x3, x4, _] = t;
        if x1 < x2 && x3 < x4 {
            let residual = ev.derivation(t);
            if !residual.is_zero() {
                out.push(PreLieViolation { axiom: PreLieAxiom::Derivation, tuple: t, residual });
            }
        }
    }
    for t in all_tuples(n) {
        let [x1, x2, x3, _, _] = t;
        if x1 < x2 && x2 < x3 {
            let residual = ev.cyclic(t);
            if !residual.is_zero() {
                out.push(PreLieViolation { axiom: PreLieAxiom::Cyclic, tuple: t, residual });
            }
        }
    }
    out
}

/// Every basis tuple, no reduction.
pub fn check_pre_lie_axioms_exhaustive(p: &PreLieAlgebra) -> Vec<PreLieViolation> {
    let n = p.dim();
    let ev = Eval { p, n };
    let mut out = Vec::new();
    for axiom in [PreLieAxiom::Derivation, PreLieAxiom::Cyclic] {
        for t in all_tuples(n) {
            let residual = match axiom {
                PreLieAxiom::Derivation => ev.derivation(t),
                PreLieAxiom::Cyclic => ev.cyclic(t),
            };
            if !residual.is_zero() {
                out.push(PreLieViolation { axiom, tuple: t, residual });
            }
        }
    }
    out
}

/// The same two identities written as sums over structure constants:
///
/// `Σ_t C_ijk^t C_sut^l − (C_sui^t+C_uis^t+C_isu^t) C_tjk^l − (C_suj^t+C_ujs^t+C_jsu^t) C_itk^l − C_suk^t C_ijt^l`
///
/// `Σ_t (C_sui^t+C_uis^t+C_isu^t) C_tjk^l − C_ijk^t C_sut^l − C_sjk^t C_uit^l − C_ujk^t C_ist^l`
///
/// with `(s,u,i,j,k) = (x1,..,x5)`, over every index tuple.
pub fn check_pre_lie_by_constants(p: &PreLieAlgebra) -> Vec<PreLieViolation> {
    let n = p.dim();
    let c = |a: usize, b: usize, k: usize, t: usize| p.constant(a, b, k, t);
    let cyc = |s: usize, u: usize, i: usize, t: usize| &(&c(s, u, i, t) + &c(u, i, s, t)) + &c(i, s, u, t);
    let mut out = Vec::new();
    for axiom in [PreLieAxiom::Derivation, PreLieAxiom::Cyclic] {
        for tuple in all_tuples(n) {
            let [s, u, i, j, k] = tuple;
            let mut residual = Vector::zero(n);
            for l in 0..n {
                let mut acc = LaurentPoly::zero();
                for t in 0..n {
                    match axiom {
                        PreLieAxiom::Derivation => {
                            acc += &(&c(i, j, k, t) * &c(s, u, t, l));
                            acc -= &(&cyc(s, u, i, t) * &c(t, j, k, l));
                            acc -= &(&cyc(s, u, j, t) * &c(i, t, k, l));
                            acc -= &(&c(s, u, k, t) * &c(i, j, t, l));
                        }
                        PreLieAxiom::Cyclic => {
                            acc += &(&cyc(s, u, i, t) * &c(t, j, k, l));
                            acc -= &(&c(i, j, k, t) * &c(s, u, t, l));
                            acc -= &(&c(s, j, k, t) * &c(u, i, t, l));
                            acc -= &(&c(u, j, k, t) * &c(i, s, t, l));
                        }
                    }
                }
                residual[l] = acc;
            }
            if !residual.is_zero() {
                out.push(PreLieViolation { axiom, tuple, residual });
            }
        }
    }
    out
}
