//! Seeded cross-checks between two independent deciders of the same
//! property. Each returns how often they agree.

use crate::cybe::{coadjoint_double, tensor_from_operator, yang_baxter_bracket_with};
use crate::ooperator::{check_o_operator_direct, operator_from_scalars, specialized_conditions_3d, ScalarMatrix3};
use crate::par::{self, Jobs};
use crate::prelie::{check_pre_lie_axioms, check_pre_lie_by_constants};
use crate::sampling::{OperatorSample, Sampler};
use crate::trisys::TriAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementReport {
    pub samples: usize,
    /// Samples on which the first decider answers "holds".
    pub positives: usize,
    pub disagreements: Vec<String>,
}

impl AgreementReport {
    pub fn negatives(&self) -> usize {
        self.samples - self.positives
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn from_pairs(pairs: Vec<(bool, bool, String)>) -> Self {
        AgreementReport {
            samples: pairs.len(),
            positives: pairs.iter().filter(|(a, _, _)| *a).count(),
            disagreements: pairs.into_iter().filter(|(a, b, _)| a != b).map(|(_, _, d)| d).collect(),
        }
    }
}

fn describe(s: &OperatorSample) -> String {
    let rows: Vec<String> = s.matrix.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
    format!("{} [{}]", s.origin, rows.join("; "))
}

fn o_operator(m: &ScalarMatrix3) -> bool {
    check_o_operator_direct(&TriAlgebra::a3(), &operator_from_scalars(m)).is_ok_and(|v| v.is_empty())
}

/// The three cubic conditions vanish exactly when the direct check passes.
pub fn conditions_suite(seed: u64, count: usize, jobs: Jobs) -> AgreementReport {
    let samples = Sampler::new(seed).mixed_operators(count, 2);
    AgreementReport::from_pairs(par::map(jobs, &samples, |s| {
        let vanish = specialized_conditions_3d(&operator_from_scalars(&s.matrix)).is_ok_and(|c| c.iter().all(|p| p.is_zero()));
        (vanish, o_operator(&s.matrix), describe(s))
    }))
}

/// The direct axiom check agrees with the structure-constant sums.
pub fn prelie_suite(seed: u64, count: usize, jobs: Jobs) -> AgreementReport {
    let samples = Sampler::new(seed).mixed_prelie(count, 2);
    let indexed: Vec<(usize, _)> = samples.into_iter().enumerate().collect();
    AgreementReport::from_pairs(par::map(jobs, &indexed, |(n, p)| {
        let direct = check_pre_lie_axioms(p).is_empty();
        let by_constants = check_pre_lie_by_constants(p).is_empty();
        (direct, by_constants, format!("sample {n} (dim {})", p.dim()))
    }))
}

/// A numeric operator passes the O-operator check exactly when the tensor
/// built from it solves the Yang-Baxter equation on the coadjoint double.
pub fn lemma_suite(seed: u64, count: usize, jobs: Jobs) -> AgreementReport {
    let samples = Sampler::new(seed).mixed_operators(count, 2);
    let double = coadjoint_double(&TriAlgebra::a3());
    AgreementReport::from_pairs(par::map(jobs, &samples, |s| {
        let r = tensor_from_operator(&double, &operator_from_scalars(&s.matrix)).expect("3x3 operator on dim 6");
        let solves = yang_baxter_bracket_with(&double, &r, Jobs::Sequential).expect("dims agree").is_zero();
        (o_operator(&s.matrix), solves, describe(s))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_agree_and_mix() {
        let c = conditions_suite(3, 40, Jobs::Sequential);
        assert!(c.passed(), "{c:?}");
        assert!(c.positives > 0 && c.negatives() > 0);
        assert!(prelie_suite(3, 12, Jobs::Sequential).passed());
        assert!(lemma_suite(3, 12, Jobs::Sequential).passed());
    }
}
