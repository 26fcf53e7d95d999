//! Maximization over Hilbert functions meeting the bounds, keyed by
//! `(d, c, k)`: the best prefix ending in degree `d` with running sum `c`
//! whose last appended value is at least `k`.

use crate::constraints::{Algorithm, ConstraintSpec};
use crate::error::{Error, Result};

use super::plan::Plan;
use super::{pareto_insert, Limits, RawDPResult, ResultsMode, ValueVector};

const ABSENT: u64 = u64::MAX;

/// Where a frontier entry of suffix cell `(d, c, k)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Src {
    /// Appending exactly `k` to entry `.0` of the predecessor cell.
    Own(u32),
    /// Entry `.0` of suffix cell `(d, c, k + 1)`.
    Next(u32),
}

const OWN_HIT: u8 = 1;
const NEXT_HIT: u8 = 2;

struct Layer {
    clo: u64,
    chi: u64,
    lo: u64,
    span: usize,
    best_q: Vec<u64>,
    best_sum: Vec<u64>,
    frontier: Vec<Vec<ValueVector>>,
}

impl Layer {
    fn base(width: usize, mode: ResultsMode) -> Layer {
        Layer {
            clo: 0,
            chi: 0,
            lo: 0,
            span: 1,
            best_q: vec![0; width],
            best_sum: vec![0],
            frontier: if mode == ResultsMode::All { vec![vec![ValueVector(vec![0; width])]] } else { Vec::new() },
        }
    }
}

enum Trail {
    None,
    One(Vec<Vec<u64>>),
    AllSum(Vec<Vec<u8>>),
    All(Vec<Vec<Vec<Vec<Src>>>>),
}

/// Predecessor suffix cell of appending `j` in degree `d >= 1`, if any.
#[inline]
fn predecessor(plan: &Plan, prev: &Layer, d: usize, c: u64, j: u64) -> Option<usize> {
    if d == 0 {
        return (c == j).then_some(0);
    }
    let pc = c.checked_sub(j)?;
    if pc < prev.clo || pc > prev.chi {
        return None;
    }
    let key = plan.lower_key(d, j).max(prev.lo);
    let ki = (key - prev.lo) as usize;
    if ki >= prev.span {
        return None;
    }
    Some((pc - prev.clo) as usize * prev.span + ki)
}

/// Maximize over `𝓛(G, F, g, f)`: tuples obeying the growth condition
/// `lower(l_d, d) <= l_{d-1}`, including the step into the forced tail.
pub fn run_complete(spec: &ConstraintSpec, mode: ResultsMode, limits: &Limits) -> Result<RawDPResult> {
    let plan = Plan::new(spec, true, limits.work)?;
    let w = plan.width();
    let big_d = plan.horizon();
    let mut prev = Layer::base(w, mode);
    let mut trail = match mode {
        ResultsMode::None => Trail::None,
        ResultsMode::One => Trail::One(Vec::with_capacity(big_d + 1)),
        ResultsMode::AllMaxBettiSum => Trail::AllSum(Vec::with_capacity(big_d + 1)),
        ResultsMode::All => Trail::All(Vec::with_capacity(big_d + 1)),
    };
    let mut cand = vec![0u64; w];

    for d in 0..=big_d {
        let (clo, chi, lo, hi) = (plan.clo(d), plan.chi(d), plan.lo(d), plan.hi(d));
        let span = plan.span(d);
        let total = plan.cells(d) * span;
        let mut best_q = vec![0u64; total * w];
        let mut best_sum = vec![ABSENT; total];
        let mut choice = if mode == ResultsMode::One { vec![0u64; total] } else { Vec::new() };
        let mut flags = if mode == ResultsMode::AllMaxBettiSum { vec![0u8; total] } else { Vec::new() };
        let mut frontier: Vec<Vec<ValueVector>> =
            if mode == ResultsMode::All { vec![Vec::new(); total] } else { Vec::new() };
        let mut sources: Vec<Vec<Vec<Src>>> =
            if mode == ResultsMode::All { vec![Vec::new(); total] } else { Vec::new() };
        let vsum: Vec<u64> = (lo..=hi).map(|j| plan.v(d, j).iter().sum()).collect();

        for (ci, c) in (clo..=chi).enumerate() {
            for j in (lo..=hi).rev() {
                let ki = (j - lo) as usize;
                let cell = ci * span + ki;
                let next = (ki + 1 < span).then_some(cell + 1);
                let next_sum = next.map_or(ABSENT, |nx| best_sum[nx]);
                let pred = predecessor(&plan, &prev, d, c, j).filter(|&p| prev.best_sum[p] != ABSENT);
                let own_sum = pred.map_or(ABSENT, |p| prev.best_sum[p] + vsum[ki]);

                // per-q maxima over the suffix
                let (head, tail) = best_q.split_at_mut((cell + 1) * w);
                let out = &mut head[cell * w..];
                if next_sum != ABSENT {
                    out.copy_from_slice(&tail[..w]);
                }
                if let Some(p) = pred {
                    let pq = &prev.best_q[p * w..(p + 1) * w];
                    let v = plan.v(d, j);
                    for q in 0..w {
                        out[q] = out[q].max(pq[q] + v[q]);
                    }
                }
                let s = match (own_sum, next_sum) {
                    (ABSENT, x) | (x, ABSENT) => x,
                    (a, b) => a.max(b),
                };
                best_sum[cell] = s;
                if s == ABSENT {
                    continue;
                }

                match mode {
                    ResultsMode::One => {
                        // ties go to the smaller appended value
                        choice[cell] = if own_sum != ABSENT && (next_sum == ABSENT || own_sum >= next_sum) {
                            j
                        } else {
                            choice[cell + 1]
                        };
                    }
                    ResultsMode::AllMaxBettiSum => {
                        let mut f = 0;
                        if own_sum == s {
                            f |= OWN_HIT;
                        }
                        if next_sum == s {
                            f |= NEXT_HIT;
                        }
                        flags[cell] = f;
                    }
                    ResultsMode::All => {
                        let mut front: Vec<(ValueVector, Vec<Src>)> = Vec::new();
                        if let Some(nx) = next {
                            for (e, v) in frontier[nx].iter().enumerate() {
                                front.push((v.clone(), vec![Src::Next(e as u32)]));
                            }
                        }
                        if let Some(p) = pred {
                            let v = plan.v(d, j);
                            for (e, pv) in prev.frontier[p].iter().enumerate() {
                                for q in 0..w {
                                    cand[q] = pv.0[q] + v[q];
                                }
                                pareto_insert(
                                    &mut front,
                                    ValueVector(cand.clone()),
                                    vec![Src::Own(e as u32)],
                                    |a, b| a.extend(b),
                                );
                            }
                        }
                        let (vecs, srcs) = front.into_iter().unzip();
                        frontier[cell] = vecs;
                        sources[cell] = srcs;
                    }
                    ResultsMode::None => {}
                }
            }
        }
        match &mut trail {
            Trail::One(t) => t.push(choice),
            Trail::AllSum(t) => t.push(flags),
            Trail::All(t) => t.push(sources),
            Trail::None => {}
        }
        prev = Layer { clo, chi, lo, span, best_q, best_sum, frontier };
    }

    let t = plan.terminal();
    if t < prev.clo || t > prev.chi {
        return Err(Error::EmptyFamily);
    }
    let terminal = (t - prev.clo) as usize * prev.span;
    if prev.best_sum[terminal] == ABSENT {
        return Err(Error::EmptyFamily);
    }
    let per_q_max = ValueVector(prev.best_q[terminal * w..(terminal + 1) * w].to_vec());
    let max_sum = prev.best_sum[terminal];

    let walker = Walker { plan: &plan };
    let mut witnesses = Vec::new();
    let mut frontier_out = Vec::new();
    match &trail {
        Trail::None => {}
        Trail::One(choice) => {
            let mut tuple = vec![0u64; big_d + 1];
            let (mut c, mut cell) = (t, terminal);
            for d in (0..=big_d).rev() {
                let j = choice[d][cell];
                tuple[d] = j;
                if d > 0 {
                    c -= j;
                    cell = walker.prev_cell(d, c, j);
                }
            }
            witnesses.push(tuple);
        }
        Trail::AllSum(flags) => {
            let mut tuple = vec![0u64; big_d + 1];
            walker.expand_sum(flags, big_d, t, plan.lo(big_d), &mut tuple, &mut witnesses, limits.witnesses)?;
            witnesses.sort();
        }
        Trail::All(dag) => {
            for (e, v) in prev.frontier[terminal].iter().enumerate() {
                let mut tuples = Vec::new();
                let mut tuple = vec![0u64; big_d + 1];
                let budget = limits.witnesses.saturating_sub(witnesses.len());
                walker.expand_all(dag, big_d, t, plan.lo(big_d), e as u32, &mut tuple, &mut tuples, budget)?;
                tuples.sort();
                witnesses.extend(tuples.iter().cloned());
                frontier_out.push((v.clone(), tuples));
            }
            frontier_out.sort_by(|a, b| b.0.cmp(&a.0));
            witnesses.sort();
        }
    }

    Ok(RawDPResult { algorithm: Algorithm::Complete, mode, per_q_max, max_sum, witnesses, frontier: frontier_out })
}

fn too_many(limit: usize) -> Error {
    Error::InstanceTooLarge { estimate: format!("more than {limit} witnesses"), ceiling: format!("{limit} witnesses") }
}

/// Backward traversal of the stored pointers.
struct Walker<'a> {
    plan: &'a Plan,
}

impl Walker<'_> {
    fn cell(&self, d: usize, c: u64, k: u64) -> usize {
        (c - self.plan.clo(d)) as usize * self.plan.span(d) + (k - self.plan.lo(d)) as usize
    }

    /// Cell in degree `d - 1` reached after appending `j` in degree `d`;
    /// `c` is already the running sum of degree `d - 1`.
    fn prev_cell(&self, d: usize, c: u64, j: u64) -> usize {
        let key = self.plan.lower_key(d, j).max(self.plan.lo(d - 1));
        self.cell(d - 1, c, key)
    }

    fn prev_key(&self, d: usize, j: u64) -> u64 {
        self.plan.lower_key(d, j).max(self.plan.lo(d - 1))
    }

    #[allow(clippy::too_many_arguments)]
    fn expand_sum(
        &self,
        flags: &[Vec<u8>],
        d: usize,
        c: u64,
        k_start: u64,
        tuple: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        limit: usize,
    ) -> Result<()> {
        let mut k = k_start;
        loop {
            let f = flags[d][self.cell(d, c, k)];
            if f & OWN_HIT != 0 {
                tuple[d] = k;
                if d == 0 {
                    if out.len() >= limit {
                        return Err(too_many(limit));
                    }
                    out.push(tuple.clone());
                } else {
                    self.expand_sum(flags, d - 1, c - k, self.prev_key(d, k), tuple, out, limit)?;
                }
            }
            if f & NEXT_HIT == 0 {
                return Ok(());
            }
            k += 1;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn expand_all(
        &self,
        dag: &[Vec<Vec<Vec<Src>>>],
        d: usize,
        c: u64,
        k: u64,
        entry: u32,
        tuple: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        limit: usize,
    ) -> Result<()> {
        let mut stack = vec![(k, entry)];
        while let Some((k, entry)) = stack.pop() {
            for &src in &dag[d][self.cell(d, c, k)][entry as usize] {
                match src {
                    Src::Next(e) => stack.push((k + 1, e)),
                    Src::Own(e) => {
                        tuple[d] = k;
                        if d == 0 {
                            if out.len() >= limit {
                                return Err(too_many(limit));
                            }
                            out.push(tuple.clone());
                        } else {
                            self.expand_all(dag, d - 1, c - k, self.prev_key(d, k), e, tuple, out, limit)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
