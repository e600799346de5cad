//! The printed multiplication tables of the algebras induced by `O1..O31`.
//! Every printed product is a multiple of `e1`; entries are kept in print
//! order, so a repeated key stays visible.

use super::PreLieAlgebra;
use crate::scalar::{poly, LaurentPoly};
use crate::trisys::Vector;

/// One printed line `{e_i, e_j, e_k} = value · e1`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub key: [usize; 3],
    pub value: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedTable {
    pub family: String,
    pub entries: Vec<TableEntry>,
}

type Raw = &'static [(usize, usize, usize, &'static str)];

const TABLES: [Raw; 31] = [
    &[(2, 3, 1, "a22*a33 - a23*a32"), (2, 3, 2, "a23*a31 - a21*a33"), (1, 3, 3, "a21*a32 - a22*a31")],
    &[
        (1, 2, 2, "-a11*a23"),
        (1, 2, 3, "-a11*a33"),
        (1, 3, 2, "-a11*a33"),
        (1, 3, 3, "a11*a32"),
        (2, 3, 1, "-(a23*a32 + a33^2)"),
        (2, 3, 2, "a23*a31 - a21*a33"),
        (2, 3, 3, "a21*a32 + a33*a31"),
    ],
    &[(1, 2, 2, "a13*a21"), (2, 3, 2, "-a21*a33")],
    &[(1, 3, 1, "-a13"), (1, 3, 1, "-a23"), (2, 3, 1, "-a23"), (2, 3, 2, "-a23^2/a13")],
    &[(1, 2, 1, "-a13*a22"), (1, 3, 1, "-a13*a32")],
    &[(1, 2, 1, "-a13*a22"), (1, 2, 2, "a13*a21")],
    &[
        (1, 2, 1, "-a13"),
        (1, 2, 2, "a13*a21"),
        (1, 3, 1, "-a13/a21"),
        (1, 3, 2, "a13"),
        (2, 3, 1, "a13"),
        (2, 3, 2, "-a13*a21"),
    ],
    &[
        (1, 2, 1, "-a22"),
        (1, 2, 2, "a21 - a33"),
        (1, 2, 3, "a22"),
        (2, 3, 1, "-a22"),
        (2, 3, 2, "a21 - a33"),
        (2, 3, 3, "a22"),
    ],
    &[
        (1, 2, 1, "-a22"),
        (1, 2, 3, "a22"),
        (1, 3, 1, "-a32"),
        (1, 3, 3, "a32"),
        (2, 3, 1, "-a22"),
        (2, 3, 3, "a22"),
    ],
    &[(1, 3, 3, "-a12*a31"), (2, 3, 3, "-a22*a31")],
    &[(1, 3, 1, "a12*a33"), (1, 3, 3, "a12*a31")],
    &[(1, 2, 1, "a12"), (1, 3, 1, "a12*a33")],
    &[
        (1, 2, 1, "a12"),
        (1, 2, 3, "-a12"),
        (1, 3, 1, "a12*a31"),
        (1, 3, 3, "-a12*a31"),
        (2, 3, 1, "a12"),
        (2, 3, 3, "-a12"),
    ],
    &[
        (1, 2, 2, "a21"),
        (1, 2, 3, "-a21"),
        (1, 3, 2, "-a21"),
        (1, 3, 3, "-a21"),
        (2, 3, 2, "-(a22*a21 + a32*a21)"),
        (2, 3, 3, "a22*a21 + a32*a21"),
    ],
    &[
        (1, 2, 1, "a23 - a22"),
        (1, 2, 2, "a32*(a22 - a23)"),
        (1, 2, 3, "a32*(a23 - a22)"),
        (2, 3, 1, "a22*a32 - a23*a32"),
        (2, 3, 2, "a32^2*(a23 - a22)"),
        (2, 3, 3, "a32^2*(a22 - a23)"),
    ],
    &[
        (1, 3, 1, "a33 - a32"),
        (1, 3, 2, "a22*(a33 - a32)"),
        (1, 3, 3, "-a22*(a33 - a32)"),
        (2, 3, 1, "a22*a33 - a22*a32"),
        (2, 3, 2, "a22^2*(a33 - a32)"),
        (2, 3, 3, "-a22^2*(a33 - a32)"),
    ],
    &[(1, 2, 1, "a12*a23"), (1, 3, 1, "a12*a33")],
    &[(1, 2, 1, "a23 - a22"), (1, 3, 1, "(a23*a32 - a23*a32)/a22")],
    &[
        (1, 2, 1, "1"),
        (1, 2, 2, "a21"),
        (1, 2, 3, "-a21"),
        (1, 3, 1, "1"),
        (1, 3, 2, "a21"),
        (1, 3, 3, "-a21"),
    ],
    &[(1, 3, 3, "a11*a32 - a12*a31")],
    &[
        (1, 2, 1, "a12*a23"),
        (1, 2, 2, "-a11*a23"),
        (1, 2, 3, "-a11*a33"),
        (1, 3, 1, "a12*a33"),
        (1, 3, 2, "-a11*a33"),
        (1, 3, 3, "-a11*a33^2/a23"),
    ],
    &[
        (1, 3, 1, "-a33^2"),
        (1, 3, 2, "-a33^2"),
        (1, 3, 3, "a33*(a32 + a33*a31)"),
        (2, 3, 1, "-a33^2"),
        (2, 3, 2, "-a33"),
        (2, 3, 3, "a32 + a33*a31"),
    ],
    &[
        (1, 2, 1, "1"),
        (1, 2, 2, "-a11"),
        (1, 2, 3, "-(a11 + 1)"),
        (1, 3, 1, "1"),
        (1, 3, 2, "-a11"),
        (1, 3, 3, "-(a11 + 1)"),
        (2, 3, 1, "1"),
        (2, 3, 2, "-a11"),
        (2, 3, 3, "-(a11 + 1)"),
    ],
    &[
        (1, 3, 1, "-1"),
        (1, 3, 2, "1"),
        (1, 3, 3, "a32 - a31"),
        (2, 3, 1, "1"),
        (2, 3, 2, "-1"),
        (2, 3, 3, "a31 - a32"),
    ],
    &[
        (1, 2, 1, "a23"),
        (1, 2, 2, "-a23"),
        (1, 2, 3, "2 + a23*a31"),
        (1, 3, 1, "-1"),
        (1, 3, 2, "1"),
        (1, 3, 3, "-(2/a23 + a31)"),
        (2, 3, 1, "-(1 + a23*a31)"),
        (2, 3, 2, "a23*a31 + 1"),
        (2, 3, 3, "-(2/a23 + 3*a31 + a23*a31^2)"),
    ],
    &[
        (1, 2, 1, "a23 + a33"),
        (1, 2, 2, "-a11*a23"),
        (1, 2, 3, "-a11*a33"),
        (1, 3, 1, "a33*(a23 + a33)/a23"),
        (1, 3, 2, "-a11*a33"),
        (1, 3, 3, "-a11*a33^2/a23"),
    ],
    &[
        (1, 2, 1, "-1"),
        (1, 2, 3, "1"),
        (1, 3, 1, "-(1 + a32)"),
        (1, 3, 3, "1 + a32"),
        (2, 3, 1, "-1"),
        (2, 3, 3, "1"),
    ],
    &[
        (1, 2, 1, "-(a33 + a22 - 1)"),
        (1, 2, 2, "-(a33 - 1)"),
        (1, 2, 3, "-a22"),
        (1, 3, 1, "a33 + a22 - 1"),
        (1, 3, 2, "a33 - 1"),
        (1, 3, 3, "a22"),
        (2, 3, 1, "a33 + a22 - 1"),
        (2, 3, 2, "a33 - 1"),
        (2, 3, 3, "a22"),
    ],
    &[
        (1, 2, 1, "a23 + a33"),
        (1, 2, 2, "a33*(a23 - a33)"),
        (1, 2, 3, "a33*(a33 - a23)"),
        (2, 3, 1, "a33*(a23 - a33)"),
        (2, 3, 2, "a33^2*(a33 - a23)"),
        (2, 3, 3, "a33^2*(a33 - a23)"),
    ],
    &[
        (1, 2, 1, "s - 1"),
        (1, 2, 2, "2 - s"),
        (1, 2, 3, "-1"),
        (1, 3, 1, "s + 1"),
        (1, 3, 2, "1"),
        (1, 3, 3, "-(s + 2)"),
        (2, 3, 1, "-2"),
        (2, 3, 2, "s - 1"),
        (2, 3, 3, "-(s + 1)"),
    ],
    &[
        (1, 2, 1, "-(s + 1)"),
        (1, 2, 2, "2 + s"),
        (1, 2, 3, "-1"),
        (1, 3, 1, "1 - s"),
        (1, 3, 2, "1"),
        (1, 3, 3, "s - 2"),
        (2, 3, 1, "2"),
        (2, 3, 2, "-(s + 1)"),
        (2, 3, 3, "s - 1"),
    ],
];

/// Printed table for family `O{index}` (1-based).
pub fn printed_table(index: usize) -> Option<PrintedTable> {
    let raw = TABLES.get(index.checked_sub(1)?)?;
    Some(PrintedTable {
        family: format!("O{index}"),
        entries: raw.iter().map(|&(i, j, k, e)| TableEntry { key: [i, j, k], value: poly(e) }).collect(),
    })
}

pub fn printed_tables() -> Vec<PrintedTable> {
    (1..=TABLES.len()).filter_map(printed_table).collect()
}

impl PrintedTable {
    /// Keys printed more than once, with every printed value.
    pub fn duplicates(&self) -> Vec<([usize; 3], Vec<LaurentPoly>)> {
        let mut out: Vec<([usize; 3], Vec<LaurentPoly>)> = Vec::new();
        for e in &self.entries {
            let count = self.entries.iter().filter(|f| f.key == e.key).count();
            if count > 1 && !out.iter().any(|(k, _)| *k == e.key) {
                let values = self.entries.iter().filter(|f| f.key == e.key).map(|f| f.value.clone()).collect();
                out.push((e.key, values));
            }
        }
        out
    }

    /// The table as a product on a 3-dimensional space; for a repeated key
    /// the first printed value wins.
    pub fn to_prelie(&self) -> PreLieAlgebra {
        let mut p = PreLieAlgebra::zero(3);
        let mut seen = Vec::new();
        for e in &self.entries {
            if seen.contains(&e.key) {
                continue;
            }
            seen.push(e.key);
            let [i, j, k] = e.key;
            let v = Vector::new(vec![e.value.clone(), LaurentPoly::zero(), LaurentPoly::zero()]);
            p.set_product(i - 1, j - 1, k - 1, v).expect("printed keys are valid");
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_has_a_table() {
        assert_eq!(printed_tables().len(), 31);
        assert!(printed_table(0).is_none());
        assert!(printed_table(32).is_none());
    }

    #[test]
    fn o4_repeats_a_key() {
        let t = printed_table(4).unwrap();
        let d = t.duplicates();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, [1, 3, 1]);
        assert_eq!(d[0].1, vec![poly("-a13"), poly("-a23")]);
        assert!(printed_tables().iter().filter(|t| t.family != "O4").all(|t| t.duplicates().is_empty()));
    }

    #[test]
    fn o18_second_line_is_zero() {
        let t = printed_table(18).unwrap();
        assert!(t.entries[1].value.is_zero());
    }
}
