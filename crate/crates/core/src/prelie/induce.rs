use super::{printed_table, PreLieAlgebra, PreLieError};
use crate::ooperator::{check_o_operator_direct, check_o_operator_rep, family, ParamOperator};
use crate::scalar::LaurentPoly;
use crate::trisys::{Representation, TriAlgebra, Vector};

/// `{e_i, e_j, e_k} = [Te_i, Te_j, e_k]` without checking that `T` is an
/// O-operator.
pub fn induce_from_operator_unchecked(a: &TriAlgebra, t: &ParamOperator) -> PreLieAlgebra {
    let n = a.dim();
    let mut p = PreLieAlgebra::with_names(a.basis_names().to_vec());
    for i in 0..n {
        for j in i + 1..n {
            let (ti, tj) = (t.image(i), t.image(j));
            for k in 0..n {
                let v = a.bracket(&ti, &tj, &Vector::basis(n, k)).expect("dimensions checked by caller");
                p.set_product(i, j, k, v).expect("i < j");
            }
        }
    }
    p
}

/// The 3-Pre-Lie product induced by an O-operator for the adjoint
/// representation.
pub fn induce_from_operator(a: &TriAlgebra, t: &ParamOperator) -> Result<PreLieAlgebra, PreLieError> {
    let violations = check_o_operator_direct(a, t)?;
    if !violations.is_empty() {
        return Err(PreLieError::NotAnOOperator(violations.len()));
    }
    Ok(induce_from_operator_unchecked(a, t))
}

/// `{u, v, w} = ρ(Tu, Tv) w` on the carrier, without checking `T`.
pub fn induce_from_representation_unchecked(
    a: &TriAlgebra,
    rho: &Representation,
    t: &ParamOperator,
) -> Result<PreLieAlgebra, PreLieError> {
    let m = rho.carrier_dim();
    if t.source_dim() != m || t.target_dim() != a.dim() || rho.algebra_dim() != a.dim() {
        return Err(PreLieError::DimensionMismatch { expected: m, found: t.source_dim() });
    }
    let mut p = PreLieAlgebra::zero(m);
    for i in 0..m {
        for j in i + 1..m {
            let action = rho.action(&t.image(i), &t.image(j))?;
            for k in 0..m {
                p.set_product(i, j, k, action.apply(&Vector::basis(m, k)))?;
            }
        }
    }
    Ok(p)
}

/// The carrier-side 3-Pre-Lie product induced by an O-operator relative
/// to `rho`.
pub fn induce_from_representation(
    a: &TriAlgebra,
    rho: &Representation,
    t: &ParamOperator,
) -> Result<PreLieAlgebra, PreLieError> {
    let violations = check_o_operator_rep(a, rho, t)?;
    if !violations.is_empty() {
        return Err(PreLieError::NotAnOOperator(violations.len()));
    }
    induce_from_representation_unchecked(a, rho, t)
}

/// A key where two products disagree, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMismatch {
    pub key: [usize; 3],
    pub computed: Vector,
    pub printed: Vector,
}

/// Every key `(i<j, k)` where the constants of the two products differ.
pub fn table_diff(computed: &PreLieAlgebra, printed: &PreLieAlgebra) -> Vec<ProductMismatch> {
    let mut keys: Vec<[usize; 3]> = computed.constants().keys().chain(printed.constants().keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|key| {
            let [i, j, k] = key;
            let (c, p) = (computed.basis_product(i, j, k), printed.basis_product(i, j, k));
            (c != p).then_some(ProductMismatch { key, computed: c, printed: p })
        })
        .collect()
}

/// Comparison of a computed induced table with the printed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTableDiff {
    pub family: String,
    /// Whether the family passed the operator check; when it did not, the
    /// computed table comes from the unchecked construction.
    pub operator_ok: bool,
    pub mismatches: Vec<ProductMismatch>,
    /// Keys printed more than once (0-based) with every printed coefficient
    /// of `e1`.
    pub duplicates: Vec<([usize; 3], Vec<LaurentPoly>)>,
}

impl FamilyTableDiff {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty() && self.duplicates.is_empty()
    }
}

/// Inconsistencies internal to the printed tables, visible without
/// computing anything.
pub const KNOWN_TABLE_FINDINGS: [(&str, &str); 2] = [
    ("O4", "the key {e1,e3,e1} is printed twice, with values -a13 and -a23; the computed table has {e1,e3,e2} = -a23"),
    ("O18", "the {e1,e3,e1} entry is printed as (a23*a32 - a23*a32)/a22, which is identically 0"),
];

pub fn is_known_table_finding(family: &str) -> bool {
    KNOWN_TABLE_FINDINGS.iter().any(|(f, _)| *f == family)
}

/// Induces the table for catalogue family `name` and diffs it against the
/// printed table.
pub fn diff_family(name: &str) -> Result<FamilyTableDiff, PreLieError> {
    let f = family(name).ok_or_else(|| PreLieError::UnknownFamily(name.to_string()))?;
    let printed = printed_table(f.index().expect("catalogue names are O<n>")).expect("31 tables");
    let a = TriAlgebra::a3();
    let operator_ok = check_o_operator_direct(&a, &f.operator)?.is_empty();
    let computed = induce_from_operator_unchecked(&a, &f.operator);
    Ok(FamilyTableDiff {
        family: f.name,
        operator_ok,
        mismatches: table_diff(&computed, &printed.to_prelie()),
        duplicates: printed.duplicates().into_iter().map(|([i, j, k], v)| ([i - 1, j - 1, k - 1], v)).collect(),
    })
}
