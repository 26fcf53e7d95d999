//! Lexsegment ideals, Eliahou–Kervaire Betti numbers, and conversion of the
//! DP maxima into Betti-number bounds.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::constraints::{Algorithm, ConstraintSpec};
use crate::dp::{RawDPResult, ResultsMode};
use crate::error::{Error, Result};
use crate::macaulay::{binomial_u64, macaulay_lower_bound, macaulay_upper_bound};
use crate::monomials::{count_monomials_saturating, maxi_weights, v_table, LexAscending, Monomial};

/// A monomial ideal given by minimal generators, sorted by degree and then
/// descending lex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, mut generators: Vec<Monomial>) -> Self {
        generators.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        MonomialIdeal { num_vars, generators }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// The same generators in a ring with `num_vars` trailing-extended
    /// variables.
    pub fn embed(&self, num_vars: usize) -> MonomialIdeal {
        MonomialIdeal { num_vars, generators: self.generators.iter().map(|g| g.embed(num_vars)).collect() }
    }

    /// Whether some monomial of the ideal equals `m` (i.e. a generator divides it).
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Check Macaulay's growth condition for a Hilbert function of a quotient
/// of a polynomial ring in `num_vars` variables.
pub fn check_o_sequence(num_vars: usize, dh: &[u64]) -> Result<()> {
    for (d, &v) in dh.iter().enumerate() {
        if v > count_monomials_saturating(num_vars, d as u64) {
            return Err(Error::NotOSequence { degree: d });
        }
        if d >= 1 && macaulay_lower_bound(v, d as i64)? > dh[d - 1] {
            return Err(Error::NotOSequence { degree: d });
        }
    }
    Ok(())
}

/// Minimal generators of the lexsegment ideal whose quotient has Hilbert
/// function `dh`, in `num_vars` variables, through degree `dh.len() - 1`.
pub fn lex_ideal_generators(num_vars: usize, dh: &[u64]) -> Result<MonomialIdeal> {
    if num_vars == 0 {
        return Err(Error::InvalidInput("a polynomial ring needs a variable".into()));
    }
    check_o_sequence(num_vars, dh)?;
    let n = num_vars - 1;
    let mut gens = Vec::new();
    if dh.first() == Some(&0) {
        gens.push(Monomial::one(num_vars));
        return Ok(MonomialIdeal::new(num_vars, gens));
    }
    for d in 1..dh.len() {
        let bound = BigUint::from(dh[d]);
        // a generator m has m / x_maxi(m) standard, so it is w * x_i with
        // w standard of degree d - 1 and i >= maxi(w)
        for w in LexAscending::new(n, d as u64 - 1).take(dh[d - 1] as usize) {
            let from = if d == 1 { 0 } else { w.max_index()? };
            for i in from..=n {
                let m = w.mul_var(i);
                if m.lex_rank() > bound {
                    gens.push(m);
                }
            }
        }
    }
    Ok(MonomialIdeal::new(num_vars, gens))
}

/// Homological convention of a [`BettiTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `β_{q,j}(I)`.
    Ideal,
    /// `β_{q,j}(S/I)`: shifted by one, with `β_{0,0} = 1`.
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub q: usize,
    pub j: u64,
    pub value: u64,
}

/// Graded Betti numbers, stored in the ideal convention.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
    /// Number of homological positions of the ideal (`q = 0..len`).
    len: usize,
}

impl BettiTable {
    pub fn get(&self, q: usize, j: u64, convention: Convention) -> u64 {
        match convention {
            Convention::Ideal => self.entries.get(&(q, j)).copied().unwrap_or(0),
            Convention::Quotient if q == 0 => u64::from(j == 0),
            Convention::Quotient => self.entries.get(&(q - 1, j)).copied().unwrap_or(0),
        }
    }

    /// Total Betti numbers `β_0, ..., β_n` of the ideal.
    pub fn ideal_totals(&self) -> Vec<u64> {
        let mut t = vec![0u64; self.len];
        for (&(q, _), &v) in &self.entries {
            t[q] += v;
        }
        t
    }

    /// Totals of the quotient: `1` followed by the ideal totals.
    pub fn quotient_totals(&self) -> Vec<u64> {
        std::iter::once(1).chain(self.ideal_totals()).collect()
    }

    /// Nonzero entries in the given convention, ordered by `(q, j)`.
    pub fn entries(&self, convention: Convention) -> Vec<BettiEntry> {
        let shift = usize::from(convention == Convention::Quotient);
        let mut out = Vec::new();
        if shift == 1 {
            out.push(BettiEntry { q: 0, j: 0, value: 1 });
        }
        out.extend(self.entries.iter().filter(|(_, &v)| v > 0).map(|(&(q, j), &value)| BettiEntry {
            q: q + shift,
            j,
            value,
        }));
        out
    }

    /// Quotient-convention row `r` (entries with `j - q = r`) over `q = 0..=len`.
    pub fn quotient_row(&self, r: u64) -> Vec<u64> {
        (0..=self.len).map(|q| self.get(q, r + q as u64, Convention::Quotient)).collect()
    }

    /// Rendering of the quotient table: columns are `q`, rows are `j - q`,
    /// zeros print as `.`.
    pub fn render_quotient(&self) -> String {
        let max_row = self.entries(Convention::Quotient).iter().map(|e| e.j - e.q as u64).max().unwrap_or(0);
        let totals = self.quotient_totals();
        let rows: Vec<Vec<u64>> = (0..=max_row).map(|r| self.quotient_row(r)).collect();
        let cols = self.len + 1;
        let width: Vec<usize> = (0..cols)
            .map(|q| {
                let mut w = q.to_string().len().max(totals[q].to_string().len());
                for row in &rows {
                    w = w.max(row[q].to_string().len());
                }
                w
            })
            .collect();
        let label_width = "total:".len().max(format!("{max_row}:").len());
        let mut out = String::new();
        let mut line = |label: &str, cells: Vec<String>| {
            out.push_str(&format!("{label:>label_width$}"));
            for (q, c) in cells.iter().enumerate() {
                out.push_str(&format!(" {c:>w$}", w = width[q]));
            }
            out.push('\n');
        };
        line("", (0..cols).map(|q| q.to_string()).collect());
        line("total:", totals.iter().map(u64::to_string).collect());
        for (r, row) in rows.iter().enumerate() {
            let cells = row.iter().map(|&v| if v == 0 { ".".to_string() } else { v.to_string() }).collect();
            line(&format!("{r}:"), cells);
        }
        out
    }
}

/// Graded Betti numbers of a stable monomial ideal: a generator `u` of
/// degree `t` contributes `C(maxi(u), q)` to `β_{q, t+q}`.
pub fn ek_graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let mut table = BettiTable { entries: BTreeMap::new(), len: ideal.num_vars() };
    for g in ideal.generators() {
        let t = g.degree();
        let m = if t == 0 { 0 } else { g.max_index()? };
        for q in 0..=m {
            let c = binomial_u64(m as u64, q as u64).ok_or(Error::Overflow("Betti number"))?;
            let slot = table.entries.entry((q, t + q as u64)).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow("Betti number"))?;
        }
    }
    Ok(table)
}

/// `Σ_d V_q[d, tuple[d]]` for every `q`.
pub fn tuple_value(n: usize, tuple: &[u64]) -> Result<Vec<u64>> {
    let mut acc = vec![0u64; n + 1];
    for (d, &l) in tuple.iter().enumerate() {
        let row = if d == 0 {
            match l {
                0 => vec![0; n + 1],
                1 => maxi_weights(n)?.swap_remove(0),
                _ => return Err(Error::NotOSequence { degree: 0 }),
            }
        } else {
            v_table(n, d as u64, l)?.row(l).to_vec()
        };
        for (a, v) in acc.iter_mut().zip(row) {
            *a = a.checked_add(v).ok_or(Error::Overflow("V sum"))?;
        }
    }
    Ok(acc)
}

/// The difference sequence of a family member extended past the horizon
/// far enough that its lex ideal has no generators beyond the last entry.
pub fn extended_difference(spec: &ConstraintSpec, tuple: &[u64]) -> Result<Vec<u64>> {
    let big_d = spec.horizon();
    if tuple.len() != big_d + 1 {
        return Err(Error::InvalidInput(format!(
            "difference tuple has {} entries, expected {}",
            tuple.len(),
            big_d + 1
        )));
    }
    let mut dh = tuple.to_vec();
    let tail = spec.tail();
    dh.push(tail.diff(big_d + 1)?);
    // stop once the tail grows maximally, since then no new generators appear
    for e in (big_d + 1..).take(256) {
        let next = tail.diff(e + 1)?;
        let grow = macaulay_upper_bound(dh[e], e as i64)?;
        if BigUint::from(next) == grow {
            return Ok(dh);
        }
        dh.push(next);
    }
    Err(Error::NotHilbertPolynomial("tail does not reach maximal growth".into()))
}

/// Total Betti numbers `β_0, ..., β_n` of the lexsegment ideal attached to
/// a difference tuple of the family (the lex ideal of the quotient of `R`,
/// equal to those of its extension to `S`).
pub fn tuple_betti(spec: &ConstraintSpec, tuple: &[u64]) -> Result<Vec<u64>> {
    let dh = extended_difference(spec, tuple)?;
    let ideal = lex_ideal_generators(spec.variables() - 1, &dh)?;
    Ok(ek_graded_betti(&ideal)?.ideal_totals())
}

/// A cheap tuple sharing the family's tail: the least O-sequence below the
/// forced value in degree `D + 1`.
pub fn canonical_reference(spec: &ConstraintSpec) -> Result<Vec<u64>> {
    let big_d = spec.horizon();
    let mut r = vec![0u64; big_d + 2];
    r[big_d + 1] = spec.tail().diff(big_d + 1)?;
    for d in (0..=big_d).rev() {
        r[d] = macaulay_lower_bound(r[d + 1], d as i64 + 1)?;
    }
    r.pop();
    Ok(r)
}

/// `C_q = β_q(L_reference) - Σ_d V_q[d, reference_d]`; adding `C_q` to the
/// `V` sum of any tuple with the same tail gives its `β_q`.
pub fn betti_offsets(spec: &ConstraintSpec, reference: &[u64]) -> Result<Vec<i128>> {
    let betti = tuple_betti(spec, reference)?;
    let v = tuple_value(spec.n(), reference)?;
    Ok(betti.iter().zip(&v).map(|(&b, &v)| i128::from(b) - i128::from(v)).collect())
}

/// Betti-number maxima over a family, as reported to the user.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxBettiResult {
    pub algorithm: Algorithm,
    pub betti_upper_bound: Vec<u64>,
    pub maximum_betti_sum: u64,
    pub is_realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hilbert_functions: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub maximal_betti_numbers: Option<Vec<Vec<u64>>>,
}

fn shift(offsets: &[i128], v: &[u64]) -> Result<Vec<u64>> {
    offsets
        .iter()
        .zip(v)
        .map(|(&c, &x)| u64::try_from(c + i128::from(x)).map_err(|_| Error::Overflow("Betti bound")))
        .collect()
}

/// Hilbert function values `h(0), h(1), ...` of a difference tuple, cut
/// after one repetition of the stable value when the tail is constant and
/// after degree `D + 1` otherwise.
pub fn hilbert_values(spec: &ConstraintSpec, tuple: &[u64]) -> Result<Vec<u64>> {
    let mut h: Vec<u64> = tuple
        .iter()
        .scan(0u64, |acc, &l| {
            *acc += l;
            Some(*acc)
        })
        .collect();
    let big_d = spec.horizon();
    if spec.tail().is_constant() {
        let t = h[big_d];
        let start = h.iter().rposition(|&v| v != t).map_or(0, |i| i + 1);
        h.truncate(start + 1);
        h.push(t);
    } else {
        h.push(spec.tail().hf(big_d + 1)?);
    }
    Ok(h)
}

/// Add the Betti offsets to raw DP maxima and convert witnesses to
/// Hilbert functions.
pub fn finalize(raw: &RawDPResult, spec: &ConstraintSpec) -> Result<MaxBettiResult> {
    let offsets = betti_offsets(spec, &canonical_reference(spec)?)?;
    let bound = shift(&offsets, raw.per_q_max.components())?;
    let total: i128 = offsets.iter().sum::<i128>() + i128::from(raw.max_sum);
    let maximum_betti_sum = u64::try_from(total).map_err(|_| Error::Overflow("Betti sum"))?;
    let is_realizable = bound.iter().map(|&b| u128::from(b)).sum::<u128>() == u128::from(maximum_betti_sum);
    let hilbert_functions = match raw.mode {
        ResultsMode::None => None,
        _ => {
            let mut hs = raw.witnesses.iter().map(|t| hilbert_values(spec, t)).collect::<Result<Vec<_>>>()?;
            hs.sort();
            Some(hs)
        }
    };
    let maximal_betti_numbers = match raw.mode {
        ResultsMode::All => {
            let mut vs =
                raw.frontier.iter().map(|(v, _)| shift(&offsets, v.components())).collect::<Result<Vec<_>>>()?;
            vs.sort_by(|a, b| b.cmp(a));
            Some(vs)
        }
        _ => None,
    };
    Ok(MaxBettiResult {
        algorithm: raw.algorithm,
        betti_upper_bound: bound,
        maximum_betti_sum,
        is_realizable,
        hilbert_functions,
        maximal_betti_numbers,
    })
}

/// First differences of `h`, with `h(-1) = 0`.
pub fn first_difference(h: &[u64]) -> Result<Vec<u64>> {
    let mut prev = 0u64;
    h.iter()
        .enumerate()
        .map(|(d, &v)| {
            let diff = v.checked_sub(prev).ok_or(Error::NotOSequence { degree: d })?;
            prev = v;
            Ok(diff)
        })
        .collect()
}

/// The lexsegment ideal of `R = K[x_0, ..., x_{N-2}]` attached to the
/// Hilbert function `h` of `S/I`, extended to `S`, and its quotient Betti
/// table. `h` is taken to stay constant after its last listed value.
pub fn almost_lex_ideal(variables: usize, h: &[u64]) -> Result<(MonomialIdeal, BettiTable)> {
    if variables < 2 {
        return Err(Error::OutOfRange {
            what: "number of variables",
            value: variables.to_string(),
            allowed: ">= 2".into(),
        });
    }
    let mut dh = first_difference(h)?;
    dh.push(0);
    let ideal = lex_ideal_generators(variables - 1, &dh)?;
    let table = ek_graded_betti(&ideal)?;
    Ok((ideal.embed(variables), table))
}

/// Total count of degree-`d` standard monomials of `ideal` (brute force).
pub fn standard_monomials(ideal: &MonomialIdeal, d: u64) -> u64 {
    LexAscending::new(ideal.num_vars() - 1, d).filter(|m| !ideal.contains(m)).count().to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn two_variable_examples() {
        let ideal = lex_ideal_generators(2, &[1, 1, 1, 0]).unwrap();
        assert_eq!(ideal.generators(), &[mono(&[1, 0]), mono(&[0, 3])]);
        let b = ek_graded_betti(&ideal).unwrap();
        assert_eq!(b.ideal_totals(), vec![2, 1]);
        let principal = MonomialIdeal::new(2, vec![mono(&[1, 0])]);
        assert_eq!(ek_graded_betti(&principal).unwrap().ideal_totals(), vec![1, 0]);
    }

    #[test]
    fn full_difference_gives_zero_ideal() {
        let dh: Vec<u64> = (0..6).map(|d| count_monomials_saturating(3, d)).collect();
        assert!(lex_ideal_generators(3, &dh).unwrap().generators().is_empty());
    }

    #[test]
    fn growth_failures_name_the_degree() {
        assert_eq!(lex_ideal_generators(4, &[1, 4, 6, 10, 9, 6, 5, 8, 0]), Err(Error::NotOSequence { degree: 7 }));
        assert_eq!(lex_ideal_generators(2, &[1, 3]), Err(Error::NotOSequence { degree: 1 }));
        assert_eq!(lex_ideal_generators(3, &[0, 1]), Err(Error::NotOSequence { degree: 1 }));
    }

    #[test]
    fn unit_ideal() {
        let ideal = lex_ideal_generators(3, &[0, 0, 0]).unwrap();
        assert_eq!(ideal.generators(), &[Monomial::one(3)]);
        let b = ek_graded_betti(&ideal).unwrap();
        assert_eq!(b.ideal_totals(), vec![1, 0, 0]);
    }

    #[test]
    fn hilbert_function_round_trip() {
        let dh = [1u64, 3, 4, 4, 3, 3, 2, 0];
        let ideal = lex_ideal_generators(3, &dh).unwrap();
        for (d, &v) in dh.iter().enumerate() {
            assert_eq!(standard_monomials(&ideal, d as u64), v, "degree {d}");
        }
        for (a, g) in ideal.generators().iter().enumerate() {
            for (b, h) in ideal.generators().iter().enumerate() {
                assert!(a == b || !g.divides(h));
            }
        }
    }

    #[test]
    fn quotient_render_layout() {
        let ideal = lex_ideal_generators(2, &[1, 1, 1, 0]).unwrap();
        let table = ek_graded_betti(&ideal).unwrap();
        let text = table.render_quotient();
        assert_eq!(text, "       0 1 2\ntotal: 1 2 1\n    0: 1 1 .\n    1: . . .\n    2: . 1 1\n");
    }
}
