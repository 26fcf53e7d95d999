//! Dynamic-programming maximizers of `Σ_d V_q[d, Δh(d)]` over difference
//! tuples, with and without the Macaulay growth condition.

mod complete;
mod plan;
mod simplified;

use serde::{Deserialize, Serialize};

use crate::constraints::{choose_algorithm, Algorithm, AlgorithmChoice, ConstraintSpec};
use crate::error::{Error, Result};

pub use complete::run_complete;
pub use plan::{Plan, DEFAULT_WORK_CEILING};
pub use simplified::run_simplified;

/// How many witnesses to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResultsMode {
    /// Only the maxima.
    #[default]
    None,
    /// One tuple attaining the maximum Betti sum.
    One,
    /// Every tuple attaining the maximum Betti sum.
    AllMaxBettiSum,
    /// Every tuple whose value vector is Pareto-maximal.
    All,
}

/// `(v_0, ..., v_n)` with `v_q` the accumulated `Σ_d V_q[d, l_d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValueVector(pub Vec<u64>);

impl ValueVector {
    pub fn components(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `self <= other` componentwise.
    pub fn dominated_by(&self, other: &ValueVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Insert `candidate` into an antichain under componentwise order.
///
/// `merge` is called with the existing payload when an equal vector is
/// already present. Returns `true` when the candidate survives (inserted
/// or merged).
pub fn pareto_insert<W>(
    frontier: &mut Vec<(ValueVector, W)>,
    candidate: ValueVector,
    witness: W,
    merge: impl FnOnce(&mut W, W),
) -> bool {
    for (v, w) in frontier.iter_mut() {
        if *v == candidate {
            merge(w, witness);
            return true;
        }
    }
    if frontier.iter().any(|(v, _)| candidate.dominated_by(v)) {
        return false;
    }
    frontier.retain(|(v, _)| !v.dominated_by(&candidate));
    frontier.push((candidate, witness));
    true
}

/// Maxima and witnesses at the terminal key, before Betti offsets are added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDPResult {
    pub algorithm: Algorithm,
    pub mode: ResultsMode,
    /// Independent per-`q` maxima.
    pub per_q_max: ValueVector,
    /// Maximum of `Σ_q v_q`.
    pub max_sum: u64,
    /// Difference tuples `(l_0, ..., l_D)`: one (mode One), all at the
    /// maximum sum (AllMaxBettiSum), or all on the frontier (All).
    pub witnesses: Vec<Vec<u64>>,
    /// Pareto-maximal value vectors with their tuples (mode All).
    pub frontier: Vec<(ValueVector, Vec<Vec<u64>>)>,
}

/// Run the requested algorithm with default limits.
pub fn run(spec: &ConstraintSpec, algorithm: Algorithm, mode: ResultsMode) -> Result<RawDPResult> {
    let limits = Limits::default();
    match algorithm {
        Algorithm::Simplified => run_simplified(spec, mode, &limits),
        Algorithm::Complete => run_complete(spec, mode, &limits),
    }
}

/// Resolve `choice` and run.
///
/// The automatic choice lands on the simplified family only when both
/// families have the same maxima, so a simplified run that exceeds the work
/// ceiling is retried with the complete algorithm, whose state space is
/// usually far smaller.
pub fn solve(spec: &ConstraintSpec, choice: AlgorithmChoice, mode: ResultsMode) -> Result<RawDPResult> {
    let algorithm = choose_algorithm(spec, choice, mode);
    match run(spec, algorithm, mode) {
        Err(Error::InstanceTooLarge { .. })
            if choice == AlgorithmChoice::Automatic && algorithm == Algorithm::Simplified =>
        {
            run(spec, Algorithm::Complete, mode)
        }
        other => other,
    }
}

/// Resource guards for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Ceiling on `Σ_d (cells in degree d) * (appended values in degree d)`.
    pub work: u64,
    /// Ceiling on the number of witness tuples expanded at the end.
    pub witnesses: usize,
}

pub const DEFAULT_WITNESS_CEILING: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits { work: DEFAULT_WORK_CEILING, witnesses: DEFAULT_WITNESS_CEILING }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Algorithm;

    fn vv(v: &[u64]) -> ValueVector {
        ValueVector(v.to_vec())
    }

    fn insert(f: &mut Vec<(ValueVector, Vec<u32>)>, v: &[u64], w: u32) -> bool {
        pareto_insert(f, vv(v), vec![w], |a, b| a.extend(b))
    }

    fn worked_example() -> ConstraintSpec {
        use crate::constraints::{build_spec, BoundLists};
        use crate::macaulay::HilbertPolynomial;
        let lists =
            BoundLists::default().fix_hf(6, 41).diff_lower(3, 8).diff_lower(4, 8).diff_lower(5, 5).diff_lower(6, 5);
        build_spec(5, &lists, Some(&HilbertPolynomial::constant(49))).unwrap()
    }

    #[test]
    fn worked_example_raw_values() {
        let spec = worked_example();
        let all = run(&spec, Algorithm::Complete, ResultsMode::All).unwrap();
        assert_eq!(all.per_q_max, vv(&[22, 54, 47, 14]));
        assert_eq!(all.max_sum, 136);
        assert_eq!(all.witnesses.len(), 36);
        let frontier: Vec<_> = all.frontier.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(frontier, vec![vv(&[22, 54, 45, 13]), vv(&[21, 54, 47, 14])]);
        let sum = run(&spec, Algorithm::Complete, ResultsMode::AllMaxBettiSum).unwrap();
        assert_eq!(sum.witnesses.len(), 18);
        let one = run(&spec, Algorithm::Complete, ResultsMode::One).unwrap();
        assert_eq!(
            one.witnesses,
            vec![vec![
                1, 4, 6, 10, 9, 6, 5, 5, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0
            ]]
        );
        assert!(sum.witnesses.contains(&one.witnesses[0]));
        let simple = run(&spec, Algorithm::Simplified, ResultsMode::One).unwrap();
        assert_eq!(simple.per_q_max, vv(&[23, 57, 50, 15]));
        assert_eq!(simple.max_sum, 144);
        assert_eq!(&simple.witnesses[0][..9], &[1, 4, 6, 10, 9, 6, 5, 8, 0]);
        for mode in [ResultsMode::AllMaxBettiSum, ResultsMode::All] {
            let r = run(&spec, Algorithm::Simplified, mode).unwrap();
            assert!(r.witnesses.contains(&simple.witnesses[0]));
        }
    }

    #[test]
    fn pareto_examples() {
        let mut f = vec![(vv(&[2, 0]), vec![0])];
        assert!(insert(&mut f, &[1, 1], 1));
        assert_eq!(f.len(), 2);
        assert!(insert(&mut f, &[2, 1], 2));
        assert_eq!(f, vec![(vv(&[2, 1]), vec![2])]);
        assert!(insert(&mut f, &[2, 1], 3));
        assert_eq!(f, vec![(vv(&[2, 1]), vec![2, 3])]);
        assert!(!insert(&mut f, &[1, 1], 4));
        assert_eq!(f.len(), 1);
    }
}
