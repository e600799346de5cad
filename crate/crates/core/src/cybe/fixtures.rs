//! The printed solutions `r_1..r_31`. Each is written as
//! `Σ_i e_i* ⊗ v_i − v_i ⊗ e_i*`; a fixture stores the printed `v_i`
//! coordinates, with `s` standing for `√3`.

use super::lemma::tensor_from_rows;
use crate::scalar::{poly, LaurentPoly};
use crate::trisys::TwoTensor;

type Rows = [[&'static str; 3]; 3];

const Z: [&str; 3] = ["0", "0", "0"];

const SOLUTIONS: [Rows; 31] = [
    [Z, ["a21", "a22", "a23"], ["a31", "a32", "a33"]],
    [["a11", "0", "0"], ["a21", "-a33", "a23"], ["a31", "a32", "a33"]],
    [["0", "0", "a13"], ["a21", "0", "a23"], ["0", "0", "a33"]],
    [["0", "0", "a13"], ["0", "0", "a23"], ["-a23/a13", "1", "a33"]],
    [["0", "0", "a13"], ["0", "a22", "a23"], ["0", "a32", "a23*a32/a22"]],
    [["0", "0", "a13"], ["a21", "a22", "a23"], Z],
    [["0", "0", "a13"], ["a21", "1", "a23"], ["1", "1/a21", "((a23 + a21*a13)/a21)*a23"]],
    [["1", "0", "1"], ["a21", "a22", "a23"], ["-1", "0", "1"]],
    [["1", "0", "1"], ["0", "a22", "0"], ["-1", "a32", "-1"]],
    [["0", "a12", "0"], ["0", "a22", "0"], ["a31", "a32", "0"]],
    [["0", "a12", "0"], Z, ["a31", "a32", "a33"]],
    [["0", "a12", "0"], ["0", "a22", "1"], ["0", "a22*a33", "a33"]],
    [["0", "a12", "0"], ["1", "a22", "1"], ["a31", "a22*a31 - a12", "a31"]],
    [["0", "1", "1"], ["a21", "a22", "a23"], ["-a21", "a32", "a32"]],
    [["0", "1", "1"], ["a32*(a22 - a33)", "a22", "a23"], ["0", "a32", "a32"]],
    [["0", "1", "1"], ["0", "a22", "a23"], ["a22*(a33 - a32)", "a32", "a33"]],
    [["0", "a12", "a13"], ["0", "0", "a23"], ["0", "0", "a33"]],
    [["0", "1", "1"], ["0", "a22", "a23"], ["0", "a32", "a23*a32/a22"]],
    [["0", "1", "1"], ["a21", "1", "2"], ["a21", "1", "2"]],
    [["a11", "a12", "0"], Z, ["a31", "a32", "0"]],
    [["a11", "a12", "0"], ["0", "-a33", "a23"], ["0", "-a33^2/a23", "a33"]],
    [["a33", "-a33^2", "0"], ["1", "-a33", "0"], ["a31", "a32", "a33"]],
    [["a11", "1", "0"], ["1", "-1", "1"], ["1 - a11", "-2", "1"]],
    [["1", "1", "0"], ["-1", "-1", "0"], ["a31", "a32", "-1"]],
    [["1", "1", "0"], ["1", "3 + a23*a31", "a23"], ["a31", "-2/a23", "-1"]],
    [["a11", "1", "1"], ["0", "-a33", "a23"], ["0", "-a33^2/a23", "a33"]],
    [["1", "1", "1"], ["0", "1", "0"], ["-1", "a32", "-1"]],
    [["-1", "1", "1"], ["0", "a22", "1 - a33"], ["-1", "1 - a22", "a33"]],
    [["0", "1", "1"], ["a33*(a23 - a33)", "-a33", "a23"], ["0", "-a33", "a33"]],
    [["1", "1", "1"], ["1", "0", "s - 1"], ["1", "-(s + 1)", "0"]],
    [["1", "1", "1"], ["1", "0", "-(s + 1)"], ["1", "s - 1", "0"]],
];

/// Printed `v_i` coordinates of `r_{index}` (1-based).
pub fn printed_rows(index: usize) -> Option<[[LaurentPoly; 3]; 3]> {
    let rows = SOLUTIONS.get(index.checked_sub(1)?)?;
    Some(rows.map(|row| row.map(poly)))
}

/// Printed `r_{index}` as a tensor on the 6-dimensional coadjoint double.
pub fn printed_solution(index: usize) -> Option<TwoTensor> {
    let rows = printed_rows(index)?;
    Some(tensor_from_rows(3, |i, m| rows[i][m].clone()))
}

pub fn solution_count() -> usize {
    SOLUTIONS.len()
}
