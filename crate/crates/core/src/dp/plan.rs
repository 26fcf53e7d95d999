//! Per-degree search windows and `V` rows shared by both maximizers.

use num_traits::ToPrimitive;

use crate::constraints::ConstraintSpec;
use crate::error::{Error, Result};
use crate::macaulay::{macaulay_lower_bound, macaulay_upper_bound};
use crate::monomials::{maxi_weights, v_table};

/// Default ceiling on `Σ_d (cumulative window) * (appended window)`.
pub const DEFAULT_WORK_CEILING: u64 = 5_000_000_000;

/// Windows `[lo(d), hi(d)]` for `l_d` and `[clo(d), chi(d)]` for
/// `c_d = l_0 + ... + l_d`, narrowed by propagating the constraints.
///
/// Every tuple of the family stays inside the windows, so restricting the
/// recursion to them changes nothing but its cost.
#[derive(Debug, Clone)]
pub struct Plan {
    n: usize,
    horizon: usize,
    terminal: u64,
    lo: Vec<u64>,
    hi: Vec<u64>,
    clo: Vec<u64>,
    chi: Vec<u64>,
    /// Row `j - lo(d)` holds `V_0[d, j], ..., V_n[d, j]`.
    rows: Vec<Vec<u64>>,
    /// `lower(j, d)` for `j` in the window; empty at degree 0 and without
    /// the Macaulay condition.
    lower_keys: Vec<Vec<u64>>,
}

impl Plan {
    /// Windows for the family with (`macaulay = true`) or without the
    /// growth condition, failing early on empty windows and oversized
    /// instances.
    pub fn new(spec: &ConstraintSpec, macaulay: bool, work_ceiling: u64) -> Result<Plan> {
        let n = spec.n();
        let big_d = spec.horizon();
        let terminal = spec.terminal_value();
        let mut lo = spec.diff_lower().to_vec();
        let mut hi: Vec<u64> = (0..=big_d).map(|d| spec.diff_upper()[d].min(spec.ambient_diff(d))).collect();
        let mut clo = spec.hf_lower().to_vec();
        let mut chi = spec.hf_upper().to_vec();
        clo[big_d] = clo[big_d].max(terminal);
        chi[big_d] = chi[big_d].min(terminal);

        if macaulay {
            let tail = spec.tail().diff(big_d + 1)?;
            lo[big_d] = lo[big_d].max(macaulay_lower_bound(tail, big_d as i64 + 1)?);
        }

        loop {
            let before = (lo.clone(), hi.clone(), clo.clone(), chi.clone());
            if macaulay {
                for d in (1..=big_d).rev() {
                    lo[d - 1] = lo[d - 1].max(macaulay_lower_bound(lo[d], d as i64)?);
                }
                if big_d >= 1 && hi[0] == 0 {
                    hi[1] = 0;
                }
                for d in 2..=big_d {
                    let grow = macaulay_upper_bound(hi[d - 1], d as i64 - 1)?.to_u64().unwrap_or(u64::MAX);
                    hi[d] = hi[d].min(grow);
                }
            }
            let prefix = |v: &[u64]| -> Vec<u64> {
                v.iter()
                    .scan(0u64, |acc, &x| {
                        *acc = acc.saturating_add(x);
                        Some(*acc)
                    })
                    .collect()
            };
            let (p_lo, p_hi) = (prefix(&lo), prefix(&hi));
            // suffix sums over degrees strictly above d
            let mut s_lo = vec![0u64; big_d + 2];
            let mut s_hi = vec![0u64; big_d + 2];
            for d in (0..=big_d).rev() {
                s_lo[d] = s_lo[d + 1].saturating_add(lo[d]);
                s_hi[d] = s_hi[d + 1].saturating_add(hi[d]);
            }
            for d in 0..=big_d {
                clo[d] = clo[d].max(p_lo[d]).max(terminal.saturating_sub(s_hi[d + 1]));
                chi[d] = chi[d].min(p_hi[d]).min(terminal.saturating_sub(s_lo[d + 1]));
            }
            for d in 0..=big_d {
                let (prev_lo, prev_hi) = if d == 0 { (0, 0) } else { (clo[d - 1], chi[d - 1]) };
                lo[d] = lo[d].max(clo[d].saturating_sub(prev_hi));
                hi[d] = hi[d].min(chi[d].saturating_sub(prev_lo));
            }
            for d in 0..=big_d {
                if lo[d] > hi[d] || clo[d] > chi[d] {
                    return Err(Error::EmptyFamily);
                }
            }
            if before == (lo.clone(), hi.clone(), clo.clone(), chi.clone()) {
                break;
            }
        }

        let mut work: u64 = 0;
        for d in 0..=big_d {
            let cells = (chi[d] - clo[d]).saturating_add(1);
            let appended = (hi[d] - lo[d]).saturating_add(1);
            work = work.saturating_add(cells.saturating_mul(appended)).saturating_add(hi[d]);
        }
        if work > work_ceiling {
            return Err(Error::InstanceTooLarge {
                estimate: format!("{work} DP steps"),
                ceiling: format!("{work_ceiling} DP steps"),
            });
        }

        let width = n + 1;
        let mut rows = Vec::with_capacity(big_d + 1);
        let mut lower_keys = Vec::with_capacity(big_d + 1);
        for d in 0..=big_d {
            if d == 0 {
                let one = maxi_weights(n)?.swap_remove(0);
                let mut r = Vec::new();
                for j in lo[0]..=hi[0] {
                    if j == 0 {
                        r.extend(std::iter::repeat_n(0, width));
                    } else {
                        r.extend_from_slice(&one);
                    }
                }
                rows.push(r);
                lower_keys.push(Vec::new());
                continue;
            }
            let table = v_table(n, d as u64, hi[d])?;
            let mut r = Vec::with_capacity((hi[d] - lo[d] + 1) as usize * width);
            for j in lo[d]..=hi[d] {
                r.extend_from_slice(table.row(j));
            }
            rows.push(r);
            if macaulay {
                let keys = (lo[d]..=hi[d]).map(|j| macaulay_lower_bound(j, d as i64)).collect::<Result<Vec<_>>>()?;
                lower_keys.push(keys);
            } else {
                lower_keys.push(Vec::new());
            }
        }

        let plan = Plan { n, horizon: big_d, terminal, lo, hi, clo, chi, rows, lower_keys };
        plan.check_headroom()?;
        Ok(plan)
    }

    /// Refuse instances whose accumulated values could overflow `u64`.
    fn check_headroom(&self) -> Result<()> {
        let mut total: u64 = 0;
        for d in 0..=self.horizon {
            let top = self.v(d, self.hi[d]).iter().copied().max().unwrap_or(0);
            total = total.checked_add(top).ok_or(Error::Overflow("accumulated V values"))?;
        }
        total.checked_mul(self.n as u64 + 1).ok_or(Error::Overflow("accumulated V values"))?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.n + 1
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn terminal(&self) -> u64 {
        self.terminal
    }

    pub fn lo(&self, d: usize) -> u64 {
        self.lo[d]
    }

    pub fn hi(&self, d: usize) -> u64 {
        self.hi[d]
    }

    pub fn clo(&self, d: usize) -> u64 {
        self.clo[d]
    }

    pub fn chi(&self, d: usize) -> u64 {
        self.chi[d]
    }

    /// `V_*[d, j]` for `j` inside the window.
    #[inline]
    pub fn v(&self, d: usize, j: u64) -> &[u64] {
        let w = self.n + 1;
        let off = (j - self.lo[d]) as usize * w;
        &self.rows[d][off..off + w]
    }

    /// `lower(j, d)` for `j` inside the window (growth-condition plans only).
    #[inline]
    pub(crate) fn lower_key(&self, d: usize, j: u64) -> u64 {
        self.lower_keys[d][(j - self.lo[d]) as usize]
    }

    /// Number of cumulative values in degree `d`.
    pub fn cells(&self, d: usize) -> usize {
        (self.chi[d] - self.clo[d] + 1) as usize
    }

    /// Number of appended values in degree `d`.
    pub fn span(&self, d: usize) -> usize {
        (self.hi[d] - self.lo[d] + 1) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::{build_spec, BoundLists};
    use crate::macaulay::HilbertPolynomial;

    #[test]
    fn windows_contain_worked_example_witness() {
        let lists =
            BoundLists::default().fix_hf(6, 41).diff_lower(3, 8).diff_lower(4, 8).diff_lower(5, 5).diff_lower(6, 5);
        let spec = build_spec(5, &lists, Some(&HilbertPolynomial::constant(49))).unwrap();
        let plan = Plan::new(&spec, true, DEFAULT_WORK_CEILING).unwrap();
        let witness = [1u64, 4, 6, 10, 9, 6, 5, 5, 3];
        let mut c = 0;
        for d in 0..=plan.horizon() {
            let l = witness.get(d).copied().unwrap_or(0);
            c += l;
            assert!(plan.lo(d) <= l && l <= plan.hi(d), "degree {d}");
            assert!(plan.clo(d) <= c && c <= plan.chi(d), "degree {d}");
        }
        assert_eq!(plan.v(0, 1), &[3, 6, 4, 1]);
    }

    #[test]
    fn ceiling_is_enforced() {
        let spec = build_spec(5, &BoundLists::default(), Some(&HilbertPolynomial::constant(25))).unwrap();
        assert!(Plan::new(&spec, false, 10).is_err());
        assert!(Plan::new(&spec, false, DEFAULT_WORK_CEILING).is_ok());
    }
}
