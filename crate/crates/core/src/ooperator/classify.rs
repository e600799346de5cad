use super::{
    catalogue, check_o_operator_direct, conditions_vanish_i64, specialized_conditions_3d, Family, OperatorError,
    ParamOperator,
};
use crate::par::{self, Jobs};
use crate::scalar::{Assignment, LaurentPoly, Scalar};
use crate::trisys::TriAlgebra;

pub type ScalarMatrix3 = [[Scalar; 3]; 3];

/// A family together with parameter values that reproduce a given matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMatch {
    pub family: String,
    pub assignment: Assignment,
}

pub fn operator_from_scalars(m: &ScalarMatrix3) -> ParamOperator {
    ParamOperator::from_rows(
        m.iter().map(|r| r.iter().cloned().map(LaurentPoly::constant).collect()).collect(),
    )
    .expect("constant entries")
}

pub fn scalars_from_i64(m: &[[i64; 3]; 3]) -> ScalarMatrix3 {
    m.map(|r| r.map(Scalar::from_int))
}

/// Solves `p(x) = target` when `p` is `c·x + k` or `c/x + k` in its only
/// parameter `x`.
fn solve_single(p: &LaurentPoly, target: &Scalar) -> Option<(crate::scalar::Var, Scalar)> {
    let vars = p.variables();
    let var = vars.iter().next()?.clone();
    let by_exp = p.collect_in(&var);
    let k = match by_exp.get(&0) {
        Some(q) => q.as_constant()?,
        None => Scalar::zero(),
    };
    let mut others = by_exp.iter().filter(|(e, _)| **e != 0);
    let (&exp, coeff) = others.next()?;
    if others.next().is_some() {
        return None;
    }
    let c = coeff.as_constant()?;
    let rhs = target - &k;
    match exp {
        1 => Some((var, rhs.checked_div(&c).ok()?)),
        -1 => Some((var, c.checked_div(&rhs).ok()?)),
        _ => None,
    }
}

/// Parameter values for `family` that turn it into `m`, if any. Entries
/// that are affine or inverse-affine in a single unknown parameter are
/// solved first; every entry and side condition is then checked exactly.
pub fn match_family(family: &Family, m: &ScalarMatrix3) -> Option<Assignment> {
    let op = &family.operator;
    let mut sigma = Assignment::new();
    let unknowns = family.parameters();
    loop {
        let mut progress = false;
        for (i, row) in m.iter().enumerate() {
            for (j, target) in row.iter().enumerate() {
                let p = op.entry(i, j).substitute_partial(&sigma).ok()?;
                match p.variables().len() {
                    0 => {
                        if &p.as_constant()? != target {
                            return None;
                        }
                    }
                    1 => {
                        if let Some((var, value)) = solve_single(&p, target) {
                            sigma.insert(var, value);
                            progress = true;
                        }
                    }
                    _ => {}
                }
            }
        }
        if !progress || sigma.len() == unknowns.len() {
            break;
        }
    }
    if sigma.len() != unknowns.len() {
        return None;
    }
    for (i, row) in m.iter().enumerate() {
        for (j, target) in row.iter().enumerate() {
            if &op.entry(i, j).substitute(&sigma).ok()? != target {
                return None;
            }
        }
    }
    match op.violated_side_condition(&sigma) {
        Ok(None) => Some(sigma),
        _ => None,
    }
}

/// Every catalogue family containing `m`. The matrix must satisfy the
/// three cubic conditions; an empty result means no family contains it.
pub fn classify_matrix(m: &ScalarMatrix3) -> Result<Vec<FamilyMatch>, OperatorError> {
    classify_with(&catalogue(), m)
}

pub fn classify_with(families: &[Family], m: &ScalarMatrix3) -> Result<Vec<FamilyMatch>, OperatorError> {
    let conds = specialized_conditions_3d(&operator_from_scalars(m))?;
    if conds.iter().any(|c| !c.is_zero()) {
        return Err(OperatorError::Precondition(
            "matrix does not satisfy the cubic operator conditions".to_string(),
        ));
    }
    Ok(families
        .iter()
        .filter_map(|f| match_family(f, m).map(|assignment| FamilyMatch { family: f.name.clone(), assignment }))
        .collect())
}

/// Outcome of enumerating all integer matrices with entries in `[-B, B]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridReport {
    pub bound: u32,
    pub enumerated: u64,
    /// Matrices satisfying the cubic conditions.
    pub solutions: u64,
    /// Solutions contained in no family, in enumeration order.
    pub unmatched: Vec<[[i64; 3]; 3]>,
    /// Solutions contained in each family, in catalogue order.
    pub family_hits: Vec<(String, u64)>,
    /// Solutions on which the direct operator check disagrees with the
    /// cubic filter. Always expected empty.
    pub audit_failures: Vec<[[i64; 3]; 3]>,
}

fn decode(mut code: u64, bound: u32) -> [[i64; 3]; 3] {
    let base = 2 * u64::from(bound) + 1;
    let mut m = [[0i64; 3]; 3];
    for slot in m.iter_mut().flatten().rev() {
        *slot = (code % base) as i64 - i64::from(bound);
        code /= base;
    }
    m
}

struct Survivor {
    matrix: [[i64; 3]; 3],
    families: Vec<usize>,
    audit_ok: bool,
}

/// Enumerates the `(2B+1)^9` integer matrices, keeps those satisfying the
/// cubic conditions, and classifies each against the catalogue.
pub fn grid_completeness_search(bound: u32, jobs: Jobs) -> GridReport {
    let families = catalogue();
    let a = TriAlgebra::a3();
    let total = (2 * u64::from(bound) + 1).pow(9);
    let survivors = par::map_range_chunks(jobs, total, 2048, |range| {
        range
            .filter_map(|code| {
                let matrix = decode(code, bound);
                if !conditions_vanish_i64(&matrix) {
                    return None;
                }
                let scalars = scalars_from_i64(&matrix);
                let hits = families
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| match_family(f, &scalars).is_some())
                    .map(|(i, _)| i)
                    .collect();
                let audit_ok = check_o_operator_direct(&a, &operator_from_scalars(&scalars))
                    .map(|v| v.is_empty())
                    .unwrap_or(false);
                Some(Survivor { matrix, families: hits, audit_ok })
            })
            .collect()
    });
    let mut counts = vec![0u64; families.len()];
    let mut unmatched = Vec::new();
    let mut audit_failures = Vec::new();
    for s in &survivors {
        for &i in &s.families {
            counts[i] += 1;
        }
        if s.families.is_empty() {
            unmatched.push(s.matrix);
        }
        if !s.audit_ok {
            audit_failures.push(s.matrix);
        }
    }
    GridReport {
        bound,
        enumerated: total,
        solutions: survivors.len() as u64,
        unmatched,
        family_hits: families.iter().map(|f| f.name.clone()).zip(counts).collect(),
        audit_failures,
    }
}
