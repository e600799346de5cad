use std::collections::BTreeSet;

use super::{check_o_operator_direct, OViolation, OperatorError, ParamOperator};
use crate::par::{self, Jobs};
use crate::scalar::{poly, Var};
use crate::trisys::{Matrix, TriAlgebra};

/// A named operator family on `[e1,e2,e3] = e1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    pub operator: ParamOperator,
}

impl Family {
    pub fn parameters(&self) -> BTreeSet<Var> {
        self.operator.parameters()
    }

    /// Position in the catalogue, `O7` → 7.
    pub fn index(&self) -> Option<usize> {
        self.name.strip_prefix('O')?.parse().ok()
    }
}

// Row i lists the coordinates of T(e_i); the last field lists expressions
// asserted nonzero.
const FAMILIES: [([[&str; 3]; 3], &[&str]); 31] = [
    ([["0", "0", "0"], ["a21", "a22", "a23"], ["a31", "a32", "a33"]], &[]),
    ([["a11", "0", "0"], ["a21", "-a33", "a23"], ["a31", "a32", "a33"]], &[]),
    ([["0", "0", "a13"], ["a21", "0", "a23"], ["0", "0", "a33"]], &[]),
    ([["0", "0", "a13"], ["0", "0", "a23"], ["-a23/a13", "1", "a33"]], &["a13"]),
    ([["0", "0", "a13"], ["0", "a22", "a23"], ["0", "a32", "a23*a32/a22"]], &["a22"]),
    ([["0", "0", "a13"], ["a21", "a22", "a23"], ["0", "0", "0"]], &[]),
    ([["0", "0", "a13"], ["a21", "1", "a23"], ["1", "1/a21", "a23/a21 + a13"]], &["a21"]),
    ([["1", "0", "1"], ["a21", "a22", "a23"], ["-1", "0", "-1"]], &[]),
    ([["1", "0", "1"], ["0", "a22", "0"], ["-1", "a32", "-1"]], &[]),
    ([["0", "a12", "0"], ["0", "a22", "0"], ["a31", "a32", "0"]], &[]),
    ([["0", "a12", "0"], ["0", "0", "0"], ["a31", "a32", "a33"]], &[]),
    ([["0", "a12", "0"], ["0", "a22", "1"], ["0", "a22*a33", "a33"]], &[]),
    ([["0", "a12", "0"], ["1", "a22", "1"], ["a31", "a22*a31 - a12", "a31"]], &[]),
    ([["0", "1", "1"], ["a21", "a22", "a22"], ["-a21", "a32", "a32"]], &[]),
    ([["0", "1", "1"], ["a32*(a22 - a23)", "a22", "a23"], ["0", "a32", "a32"]], &[]),
    ([["0", "1", "1"], ["0", "a22", "a22"], ["a22*(a33 - a32)", "a32", "a33"]], &[]),
    ([["0", "a12", "a13"], ["0", "0", "a23"], ["0", "0", "a33"]], &[]),
    ([["0", "1", "1"], ["0", "a22", "a23"], ["0", "a32", "a23*a32/a22"]], &["a22"]),
    ([["0", "1", "1"], ["a21", "1", "2"], ["a21", "1", "2"]], &[]),
    ([["a11", "a12", "0"], ["0", "0", "0"], ["a31", "a32", "0"]], &[]),
    ([["a11", "a12", "0"], ["0", "-a33", "a23"], ["0", "-a33^2/a23", "a33"]], &["a23"]),
    ([["a33", "-a33^2", "0"], ["1", "-a33", "0"], ["a31", "a32", "a33"]], &[]),
    ([["a11", "1", "0"], ["1", "-1", "1"], ["1 - a11", "-2", "1"]], &[]),
    ([["1", "1", "0"], ["-1", "-1", "0"], ["a31", "a32", "-1"]], &[]),
    ([["1", "1", "0"], ["1", "3 + a23*a31", "a23"], ["a31", "-2/a23", "-1"]], &["a23"]),
    ([["a11", "1", "1"], ["0", "-a33", "a23"], ["0", "-a33^2/a23", "a33"]], &["a23"]),
    ([["1", "1", "1"], ["0", "1", "0"], ["-1", "a32", "-1"]], &[]),
    ([["-1", "1", "1"], ["0", "a22", "1 - a33"], ["-1", "1 - a22", "a33"]], &["a33 - 1"]),
    ([["0", "1", "1"], ["a33*(a23 - a33)", "-a33", "a23"], ["0", "-a33", "a33"]], &[]),
    ([["1", "1", "1"], ["1", "0", "s - 1"], ["1", "-1 - s", "0"]], &[]),
    ([["1", "1", "1"], ["1", "0", "-1 - s"], ["1", "s - 1", "0"]], &[]),
];

/// The 31 operator families `O1..O31` as printed, with `s = √3`.
pub fn catalogue() -> Vec<Family> {
    FAMILIES
        .iter()
        .enumerate()
        .map(|(idx, (rows, side))| {
            let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|e| poly(e)).collect()).collect());
            let operator = ParamOperator::new(m, side.iter().map(|e| poly(e)).collect())
                .expect("catalogue denominators are covered");
            Family { name: format!("O{}", idx + 1), operator }
        })
        .collect()
}

/// Looks a family up by name, accepting `O7`, `o7` or `7`.
pub fn family(name: &str) -> Option<Family> {
    let key = name.trim_start_matches(['O', 'o']);
    let idx: usize = key.parse().ok()?;
    catalogue().into_iter().nth(idx.checked_sub(1)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub name: String,
    pub violations: Vec<OViolation>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueReport {
    pub families: Vec<FamilyCheck>,
    pub warnings: Vec<String>,
}

impl CatalogueReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FamilyCheck> {
        self.families.iter().filter(|f| !f.passed())
    }
}

/// Symbolic check of every family with its parameters left free.
pub fn verify_catalogue(a: &TriAlgebra, families: &[Family], jobs: Jobs) -> Result<CatalogueReport, OperatorError> {
    let mut warnings = Vec::new();
    if families.is_empty() {
        warnings.push("empty catalogue: nothing was checked".to_string());
    }
    let checks = par::map(jobs, families, |f| {
        check_o_operator_direct(a, &f.operator).map(|violations| FamilyCheck { name: f.name.clone(), violations })
    });
    Ok(CatalogueReport { families: checks.into_iter().collect::<Result<_, _>>()?, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_one_unique_names() {
        let cat = catalogue();
        assert_eq!(cat.len(), 31);
        let names: BTreeSet<_> = cat.iter().map(|f| f.name.clone()).collect();
        assert_eq!(names.len(), 31);
        assert_eq!(cat[6].index(), Some(7));
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(family("O24").unwrap().name, "O24");
        assert_eq!(family("o3").unwrap().name, "O3");
        assert!(family("O32").is_none());
        assert!(family("O0").is_none());
    }

    #[test]
    fn transcription_spot_checks() {
        let o4 = family("O4").unwrap();
        assert_eq!(o4.operator.entry(2, 0), &poly("-(a23/a13)"));
        let o30 = family("O30").unwrap();
        assert_eq!(o30.operator.entry(2, 1), &poly("-1-s"));
        let o28 = family("O28").unwrap();
        assert_eq!(o28.operator.side_conditions(), &[poly("a33 - 1")]);
    }

    #[test]
    fn empty_catalogue_warns() {
        let r = verify_catalogue(&TriAlgebra::a3(), &[], Jobs::Sequential).unwrap();
        assert!(r.passed());
        assert_eq!(r.warnings.len(), 1);
    }
}
