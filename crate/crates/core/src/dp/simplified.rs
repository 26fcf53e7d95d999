//! Maximization over numeric functions meeting the bounds, keyed by
//! `(d, c)` with `c` the running sum of the appended values.

use crate::constraints::{Algorithm, ConstraintSpec};
use crate::error::{Error, Result};

use super::plan::Plan;
use super::{pareto_insert, Limits, RawDPResult, ResultsMode, ValueVector};

const ABSENT: u64 = u64::MAX;

/// Sources of a frontier entry: `(appended value, entry index in the
/// previous cell)`.
type Sources = Vec<(u64, u32)>;

/// One degree of cells `c` in `[clo, chi]`.
struct Layer {
    clo: u64,
    chi: u64,
    /// Per-`q` maxima, row-major by cell.
    best_q: Vec<u64>,
    /// Maximum of `Σ_q`; `ABSENT` marks unreachable cells.
    best_sum: Vec<u64>,
    /// Pareto-maximal vectors per cell (mode All).
    frontier: Vec<Vec<ValueVector>>,
}

impl Layer {
    fn base(width: usize, mode: ResultsMode) -> Layer {
        Layer {
            clo: 0,
            chi: 0,
            best_q: vec![0; width],
            best_sum: vec![0],
            frontier: if mode == ResultsMode::All { vec![vec![ValueVector(vec![0; width])]] } else { Vec::new() },
        }
    }
}

/// Back-pointers kept for every degree.
enum Trail {
    None,
    One(Vec<Vec<u64>>),
    /// CSR per degree: `starts[cell]..starts[cell + 1]` into `js`.
    AllSum(Vec<(Vec<usize>, Vec<u64>)>),
    All(Vec<Vec<Vec<Sources>>>),
}

/// Maximize over `𝓝(G, F, g, f)`: no growth condition between degrees.
///
/// Explicitly requesting this on a family with a nontrivial upper bound on
/// `h` still returns valid upper bounds, possibly strictly larger than the
/// true maxima.
pub fn run_simplified(spec: &ConstraintSpec, mode: ResultsMode, limits: &Limits) -> Result<RawDPResult> {
    let plan = Plan::new(spec, false, limits.work)?;
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
        let (clo, chi) = (plan.clo(d), plan.chi(d));
        let cells = plan.cells(d);
        let mut best_q = vec![0u64; cells * w];
        let mut best_sum = vec![ABSENT; cells];
        let mut one = Vec::new();
        let mut starts = Vec::new();
        let mut js = Vec::new();
        let mut frontier = Vec::new();
        let mut sources = Vec::new();
        match mode {
            ResultsMode::One => one = vec![0u64; cells],
            ResultsMode::AllMaxBettiSum => starts.reserve(cells + 1),
            ResultsMode::All => {
                frontier.reserve(cells);
                sources.reserve(cells);
            }
            ResultsMode::None => {}
        }
        let vsum: Vec<u64> = (plan.lo(d)..=plan.hi(d)).map(|j| plan.v(d, j).iter().sum()).collect();

        for (ci, c) in (clo..=chi).enumerate() {
            let j_lo = plan.lo(d).max(c.saturating_sub(prev.chi));
            let j_hi = plan.hi(d).min(c.saturating_sub(prev.clo));
            let out_q = &mut best_q[ci * w..(ci + 1) * w];
            let mut s_best = ABSENT;
            let mut cell_front: Vec<(ValueVector, Sources)> = Vec::new();
            if mode == ResultsMode::AllMaxBettiSum {
                starts.push(js.len());
            }
            if c >= prev.clo {
                for j in j_lo..=j_hi {
                    if j > c {
                        break;
                    }
                    let pc = c - j;
                    if pc < prev.clo || pc > prev.chi {
                        continue;
                    }
                    let pi = (pc - prev.clo) as usize;
                    let ps = prev.best_sum[pi];
                    if ps == ABSENT {
                        continue;
                    }
                    let v = plan.v(d, j);
                    let pq = &prev.best_q[pi * w..(pi + 1) * w];
                    for q in 0..w {
                        out_q[q] = out_q[q].max(pq[q] + v[q]);
                    }
                    let s = ps + vsum[(j - plan.lo(d)) as usize];
                    let improves = s_best == ABSENT || s > s_best;
                    match mode {
                        ResultsMode::One if improves => one[ci] = j,
                        ResultsMode::AllMaxBettiSum => {
                            if improves {
                                js.truncate(starts[ci]);
                            }
                            if improves || s == s_best {
                                js.push(j);
                            }
                        }
                        ResultsMode::All => {
                            for (k, pv) in prev.frontier[pi].iter().enumerate() {
                                for q in 0..w {
                                    cand[q] = pv.0[q] + v[q];
                                }
                                pareto_insert(
                                    &mut cell_front,
                                    ValueVector(cand.clone()),
                                    vec![(j, k as u32)],
                                    |a, b| a.extend(b),
                                );
                            }
                        }
                        _ => {}
                    }
                    if improves {
                        s_best = s;
                    }
                }
            }
            best_sum[ci] = s_best;
            if mode == ResultsMode::All {
                let (vecs, srcs): (Vec<ValueVector>, Vec<Sources>) = cell_front.into_iter().unzip();
                frontier.push(vecs);
                sources.push(srcs);
            }
        }
        if mode == ResultsMode::AllMaxBettiSum {
            starts.push(js.len());
        }
        match &mut trail {
            Trail::One(t) => t.push(one),
            Trail::AllSum(t) => t.push((starts, js)),
            Trail::All(t) => t.push(sources),
            Trail::None => {}
        }
        prev = Layer { clo, chi, best_q, best_sum, frontier };
    }

    let t = plan.terminal();
    if t < prev.clo || t > prev.chi || prev.best_sum[(t - prev.clo) as usize] == ABSENT {
        return Err(Error::EmptyFamily);
    }
    let ti = (t - prev.clo) as usize;
    let per_q_max = ValueVector(prev.best_q[ti * w..(ti + 1) * w].to_vec());
    let max_sum = prev.best_sum[ti];

    let cum_lo: Vec<u64> = (0..=big_d).map(|d| plan.clo(d)).collect();
    let mut witnesses = Vec::new();
    let mut frontier_out = Vec::new();
    match &trail {
        Trail::None => {}
        Trail::One(t_one) => {
            let mut tuple = vec![0u64; big_d + 1];
            let mut c = t;
            for d in (0..=big_d).rev() {
                let j = t_one[d][(c - cum_lo[d]) as usize];
                tuple[d] = j;
                c -= j;
            }
            witnesses.push(tuple);
        }
        Trail::AllSum(t_all) => {
            let mut tuple = vec![0u64; big_d + 1];
            expand_sum(t_all, &cum_lo, big_d, t, &mut tuple, &mut witnesses, limits.witnesses)?;
            witnesses.sort();
        }
        Trail::All(dag) => {
            for (k, v) in prev.frontier[ti].iter().enumerate() {
                let mut tuples = Vec::new();
                let mut tuple = vec![0u64; big_d + 1];
                let budget = limits.witnesses.saturating_sub(witnesses.len());
                expand_all(dag, &cum_lo, big_d, t, k as u32, &mut tuple, &mut tuples, budget)?;
                tuples.sort();
                witnesses.extend(tuples.iter().cloned());
                frontier_out.push((v.clone(), tuples));
            }
            frontier_out.sort_by(|a, b| b.0.cmp(&a.0));
            witnesses.sort();
        }
    }

    Ok(RawDPResult { algorithm: Algorithm::Simplified, mode, per_q_max, max_sum, witnesses, frontier: frontier_out })
}

fn too_many(limit: usize) -> Error {
    Error::InstanceTooLarge { estimate: format!("more than {limit} witnesses"), ceiling: format!("{limit} witnesses") }
}

fn expand_sum(
    trail: &[(Vec<usize>, Vec<u64>)],
    cum_lo: &[u64],
    d: usize,
    c: u64,
    tuple: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    limit: usize,
) -> Result<()> {
    let (starts, js) = &trail[d];
    let ci = (c - cum_lo[d]) as usize;
    for &j in &js[starts[ci]..starts[ci + 1]] {
        tuple[d] = j;
        if d == 0 {
            if out.len() >= limit {
                return Err(too_many(limit));
            }
            out.push(tuple.clone());
        } else {
            expand_sum(trail, cum_lo, d - 1, c - j, tuple, out, limit)?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn expand_all(
    dag: &[Vec<Vec<Sources>>],
    cum_lo: &[u64],
    d: usize,
    c: u64,
    entry: u32,
    tuple: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    limit: usize,
) -> Result<()> {
    let ci = (c - cum_lo[d]) as usize;
    for &(j, prev_entry) in &dag[d][ci][entry as usize] {
        tuple[d] = j;
        if d == 0 {
            if out.len() >= limit {
                return Err(too_many(limit));
            }
            out.push(tuple.clone());
        } else {
            expand_all(dag, cum_lo, d - 1, c - j, prev_entry, tuple, out, limit)?;
        }
    }
    Ok(())
}
