//! Exhaustive ground truth for small families, independent of the DP
//! recursions.

use serde::{Deserialize, Serialize};

use crate::betti::{finalize, tuple_value, MaxBettiResult};
use crate::constraints::{Algorithm, ConstraintSpec};
use crate::dp::{RawDPResult, ResultsMode, ValueVector};
use crate::error::{Error, Result};
use crate::macaulay::macaulay_lower_bound;

/// Default ceiling on search nodes visited during enumeration.
pub const DEFAULT_ENUMERATION_CEILING: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Difference tuples of Hilbert functions (growth condition enforced).
    WithMacaulayCondition,
    /// Any difference tuple within the bounds.
    WithoutMacaulayCondition,
}

impl From<Algorithm> for FamilyKind {
    fn from(a: Algorithm) -> Self {
        match a {
            Algorithm::Simplified => FamilyKind::WithoutMacaulayCondition,
            Algorithm::Complete => FamilyKind::WithMacaulayCondition,
        }
    }
}

impl From<FamilyKind> for Algorithm {
    fn from(k: FamilyKind) -> Self {
        match k {
            FamilyKind::WithoutMacaulayCondition => Algorithm::Simplified,
            FamilyKind::WithMacaulayCondition => Algorithm::Complete,
        }
    }
}

/// Whether `tuple` is a member of the family, checked directly from the
/// definitions.
pub fn is_member(spec: &ConstraintSpec, kind: FamilyKind, tuple: &[u64]) -> Result<bool> {
    let big_d = spec.horizon();
    if tuple.len() != big_d + 1 {
        return Ok(false);
    }
    let mut c = 0u64;
    for (d, &l) in tuple.iter().enumerate() {
        c += l;
        if l < spec.diff_lower()[d]
            || l > spec.diff_upper()[d]
            || l > spec.ambient_diff(d)
            || c < spec.hf_lower()[d]
            || c > spec.hf_upper()[d]
        {
            return Ok(false);
        }
        if kind == FamilyKind::WithMacaulayCondition && d > 0 && macaulay_lower_bound(l, d as i64)? > tuple[d - 1] {
            return Ok(false);
        }
    }
    if c != spec.terminal_value() {
        return Ok(false);
    }
    if kind == FamilyKind::WithMacaulayCondition {
        let next = spec.tail().diff(big_d + 1)?;
        if macaulay_lower_bound(next, big_d as i64 + 1)? > tuple[big_d] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every tuple of the family, in lexicographic order.
pub fn enumerate_tuples(spec: &ConstraintSpec, kind: FamilyKind, ceiling: u64) -> Result<Vec<Vec<u64>>> {
    let big_d = spec.horizon();
    let upper: Vec<u64> = (0..=big_d).map(|d| spec.diff_upper()[d].min(spec.ambient_diff(d))).collect();
    // most that degrees after d can still add
    let mut room = vec![0u64; big_d + 2];
    for d in (0..=big_d).rev() {
        room[d] = room[d + 1].saturating_add(upper[d]);
    }
    let mut search =
        Search { spec, kind, upper, room, ceiling, visited: 0, tuple: Vec::with_capacity(big_d + 1), out: Vec::new() };
    search.descend(0, 0)?;
    Ok(search.out)
}

struct Search<'a> {
    spec: &'a ConstraintSpec,
    kind: FamilyKind,
    upper: Vec<u64>,
    room: Vec<u64>,
    ceiling: u64,
    visited: u64,
    tuple: Vec<u64>,
    out: Vec<Vec<u64>>,
}

impl Search<'_> {
    fn descend(&mut self, d: usize, c: u64) -> Result<()> {
        let big_d = self.spec.horizon();
        let target = self.spec.terminal_value();
        if d > big_d {
            if c == target && is_member(self.spec, self.kind, &self.tuple)? {
                self.out.push(self.tuple.clone());
            }
            return Ok(());
        }
        for l in self.spec.diff_lower()[d]..=self.upper[d] {
            self.visited += 1;
            if self.visited > self.ceiling {
                return Err(Error::InstanceTooLarge {
                    estimate: format!("more than {} search nodes", self.ceiling),
                    ceiling: format!("{} search nodes", self.ceiling),
                });
            }
            let nc = c + l;
            if nc > self.spec.hf_upper()[d] || nc > target {
                break;
            }
            if nc < self.spec.hf_lower()[d] || nc.saturating_add(self.room[d + 1]) < target {
                continue;
            }
            if self.kind == FamilyKind::WithMacaulayCondition
                && d > 0
                && macaulay_lower_bound(l, d as i64)? > self.tuple[d - 1]
            {
                // the lower bound grows with l
                break;
            }
            self.tuple.push(l);
            self.descend(d + 1, nc)?;
            self.tuple.pop();
        }
        Ok(())
    }
}

/// Maxima and witnesses by direct evaluation of every family member.
pub fn brute_force_raw(spec: &ConstraintSpec, kind: FamilyKind, mode: ResultsMode) -> Result<RawDPResult> {
    let tuples = enumerate_tuples(spec, kind, DEFAULT_ENUMERATION_CEILING)?;
    if tuples.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let values: Vec<Vec<u64>> = tuples.iter().map(|t| tuple_value(spec.n(), t)).collect::<Result<_>>()?;
    let width = spec.n() + 1;
    let per_q_max: Vec<u64> = (0..width).map(|q| values.iter().map(|v| v[q]).max().unwrap_or(0)).collect();
    let sums: Vec<u64> = values.iter().map(|v| v.iter().sum()).collect();
    let max_sum = sums.iter().copied().max().unwrap_or(0);
    let at_max: Vec<usize> = (0..tuples.len()).filter(|&i| sums[i] == max_sum).collect();

    let mut witnesses = Vec::new();
    let mut frontier = Vec::new();
    match mode {
        ResultsMode::None => {}
        ResultsMode::One => {
            // smallest when compared from the last degree backwards
            let best = at_max.iter().map(|&i| &tuples[i]).min_by(|a, b| a.iter().rev().cmp(b.iter().rev())).cloned();
            witnesses.extend(best);
        }
        ResultsMode::AllMaxBettiSum => {
            witnesses = at_max.iter().map(|&i| tuples[i].clone()).collect();
        }
        ResultsMode::All => {
            let dominated = |v: &Vec<u64>| values.iter().any(|w| w != v && v.iter().zip(w).all(|(a, b)| a <= b));
            let mut maximal: Vec<Vec<u64>> = values.iter().filter(|v| !dominated(v)).cloned().collect();
            maximal.sort_by(|a, b| b.cmp(a));
            maximal.dedup();
            for m in maximal {
                let ts: Vec<Vec<u64>> =
                    (0..tuples.len()).filter(|&i| values[i] == m).map(|i| tuples[i].clone()).collect();
                witnesses.extend(ts.iter().cloned());
                frontier.push((ValueVector(m), ts));
            }
        }
    }
    witnesses.sort();
    Ok(RawDPResult { algorithm: kind.into(), mode, per_q_max: ValueVector(per_q_max), max_sum, witnesses, frontier })
}

/// [`brute_force_raw`] followed by the same finalization as the DP.
pub fn brute_force_result(spec: &ConstraintSpec, kind: FamilyKind, mode: ResultsMode) -> Result<MaxBettiResult> {
    finalize(&brute_force_raw(spec, kind, mode)?, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::{build_spec, BoundLists};

    #[test]
    fn pinned_family_is_a_singleton() {
        let mut lists = BoundLists::default();
        for (d, (h, l)) in [(1u64, 1u64), (3, 2), (4, 1), (4, 0)].into_iter().enumerate() {
            lists = lists.fix_hf(d, h).diff_lower(d, l).diff_upper(d, l);
        }
        let spec = build_spec(3, &lists, None).unwrap();
        for kind in [FamilyKind::WithMacaulayCondition, FamilyKind::WithoutMacaulayCondition] {
            assert_eq!(enumerate_tuples(&spec, kind, 1000).unwrap(), vec![vec![1, 2, 1, 0]]);
            let r = brute_force_result(&spec, kind, ResultsMode::All).unwrap();
            assert!(r.is_realizable);
        }
    }

    #[test]
    fn unreachable_terminal_is_empty() {
        let lists = BoundLists::default().fix_hf(2, 9).diff_upper(1, 1).diff_upper(2, 1);
        let spec = build_spec(4, &lists, None).unwrap();
        assert!(enumerate_tuples(&spec, FamilyKind::WithoutMacaulayCondition, 1000).unwrap().is_empty());
    }

    #[test]
    fn ceiling_is_enforced() {
        let spec = build_spec(5, &BoundLists::default().fix_hf(6, 30), None).unwrap();
        assert!(matches!(
            enumerate_tuples(&spec, FamilyKind::WithoutMacaulayCondition, 100),
            Err(Error::InstanceTooLarge { .. })
        ));
    }
}
