use super::{check_pre_lie_axioms_exhaustive, PreLieAlgebra};
use crate::scalar::{Assignment, LaurentPoly, Scalar, Var};
use crate::trisys::Vector;

/// Outcome of asking whether the axioms force every product to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrivialityVerdict {
    /// Every solution of the constraints is the zero product.
    TrivialOnly,
    /// A nonzero product satisfying all constraints.
    NonTrivial { witness: Assignment },
    /// Neither a proof of triviality nor a nonzero solution was found.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim2Report {
    /// `c12kt` stands for the coefficient of `e_t` in `{e1, e2, e_k}`.
    pub parameters: Vec<Var>,
    /// Distinct nonzero coordinates of the axiom residuals over all basis
    /// 5-tuples, each normalised to a positive leading coefficient.
    pub constraints: Vec<LaurentPoly>,
    pub verdict: TrivialityVerdict,
}

impl Dim2Report {
    pub fn is_trivial_only(&self) -> bool {
        self.verdict == TrivialityVerdict::TrivialOnly
    }
}

/// The fully generic 2-dimensional product.
pub fn generic_dim2() -> (PreLieAlgebra, Vec<Var>) {
    let mut p = PreLieAlgebra::zero(2);
    let mut params = Vec::new();
    for k in 0..2 {
        let coords: Vec<LaurentPoly> = (0..2)
            .map(|t| {
                let name: Var = format!("c12{}{}", k + 1, t + 1).into();
                params.push(name.clone());
                LaurentPoly::var(name)
            })
            .collect();
        p.set_product(0, 1, k, Vector::new(coords)).expect("valid key");
    }
    (p, params)
}

fn normalise(p: &LaurentPoly) -> LaurentPoly {
    match p.terms().next() {
        Some((_, c)) if c.rat() < &num_traits::Zero::zero() => -p,
        _ => p.clone(),
    }
}

fn forces_zero(constraints: &[LaurentPoly], var: &Var) -> bool {
    constraints.iter().any(|c| {
        c.as_single_term().is_some_and(|(_, m)| m.factors().len() == 1 && &m.factors()[0].0 == var)
    })
}

/// Expands both axioms for the generic 2-dimensional product and decides
/// whether they force all four parameters to zero.
pub fn dim2_experiment() -> Dim2Report {
    let (p, parameters) = generic_dim2();
    let mut constraints: Vec<LaurentPoly> = Vec::new();
    for v in check_pre_lie_axioms_exhaustive(&p) {
        for c in v.residual.coords() {
            if !c.is_zero() {
                let c = normalise(c);
                if !constraints.contains(&c) {
                    constraints.push(c);
                }
            }
        }
    }
    constraints.sort_by_key(ToString::to_string);
    let verdict = if parameters.iter().all(|v| forces_zero(&constraints, v)) {
        TrivialityVerdict::TrivialOnly
    } else {
        search_witness(&parameters, &constraints)
            .map(|witness| TrivialityVerdict::NonTrivial { witness })
            .unwrap_or(TrivialityVerdict::Undetermined)
    };
    Dim2Report { parameters, constraints, verdict }
}

/// Nonzero assignment with entries in {-1, 0, 1} satisfying every
/// constraint, scanning in a fixed order.
fn search_witness(params: &[Var], constraints: &[LaurentPoly]) -> Option<Assignment> {
    let n = params.len() as u32;
    (1..3u32.pow(n)).find_map(|mut code| {
        let mut sigma = Assignment::new();
        for v in params {
            let digit = i64::from(code % 3);
            code /= 3;
            sigma.insert(v.clone(), Scalar::from_int(if digit == 2 { -1 } else { digit }));
        }
        constraints
            .iter()
            .all(|c| c.substitute(&sigma).is_ok_and(|x| x.is_zero()))
            .then_some(sigma)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_zero_detection() {
        let x: Var = "x".into();
        assert!(forces_zero(&[LaurentPoly::var("x").pow(2).unwrap()], &x));
        assert!(!forces_zero(&[&LaurentPoly::var("x") - &LaurentPoly::var("y")], &x));
    }

    #[test]
    fn witness_search_respects_constraints() {
        let params: Vec<Var> = vec!["x".into(), "y".into()];
        let c = vec![&LaurentPoly::var("x") + &LaurentPoly::var("y")];
        let w = search_witness(&params, &c).unwrap();
        assert_eq!(c[0].substitute(&w).unwrap(), Scalar::zero());
        assert!(w.values().any(|v| !v.is_zero()));
    }
}
