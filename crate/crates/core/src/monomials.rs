//! Monomials of `R = K[x_0, ..., x_n]` under pure lex order with
//! `x_0 > x_1 > ... > x_n`, ranking of the lex-last monomials of a degree,
//! and the cumulative `V_q[d, l]` tables built from them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macaulay::{binomial, binomial_u64};

/// Dense exponent vector; index 0 is the lex-greatest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exponents: vec![0; num_vars] }
    }

    /// `x_i^e` in `num_vars` variables.
    pub fn power(num_vars: usize, i: usize, e: u32) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[i] = e;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    /// Largest index of a variable dividing the monomial.
    pub fn max_index(&self) -> Result<usize> {
        self.exponents.iter().rposition(|&e| e > 0).ok_or(Error::ConstantMonomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[i] += 1;
        Monomial { exponents }
    }

    /// The same monomial in a ring with `num_vars >= self.num_vars()` variables.
    pub fn embed(&self, num_vars: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.resize(num_vars.max(exponents.len()), 0);
        Monomial { exponents }
    }

    /// The next monomial of the same degree in ascending lex order, if any.
    pub fn lex_successor(&self) -> Option<Monomial> {
        let mut exponents = self.exponents.clone();
        successor_in_place(&mut exponents).then_some(Monomial { exponents })
    }

    /// 1-based position among the degree-`d` monomials in ascending lex order,
    /// so `rank(x_n^d) = 1`.
    pub fn lex_rank(&self) -> BigUint {
        let n_vars = self.exponents.len();
        let mut rest = self.degree();
        let mut rank = BigUint::one();
        for (i, &a) in self.exponents.iter().enumerate().take(n_vars.saturating_sub(1)) {
            let after = (n_vars - i - 1) as i64;
            let a = u64::from(a);
            // monomials agreeing before i with a smaller exponent at i:
            // sum_{t = rest - a + 1}^{rest} C(after - 1 + t, t)
            rank += binomial(after + rest as i64, rest as i64) - binomial(after + (rest - a) as i64, (rest - a) as i64);
            rest -= a;
        }
        rank
    }
}

/// Advance `exps` to its ascending-lex successor; false when already maximal.
fn successor_in_place(exps: &mut [u32]) -> bool {
    let len = exps.len();
    if len < 2 {
        return false;
    }
    let mut tail: u32 = 0;
    for i in (0..len - 1).rev() {
        tail += exps[i + 1];
        if tail > 0 {
            exps[i] += 1;
            for e in &mut exps[i + 1..] {
                *e = 0;
            }
            exps[len - 1] = tail - 1;
            return true;
        }
    }
    false
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Power product with 1-based variable names, e.g. `x2^3*x3*x4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Number of monomials of degree `d` in `num_vars` variables.
pub fn count_monomials(num_vars: usize, d: u64) -> BigUint {
    if num_vars == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(num_vars as i64 - 1 + d as i64, d as i64)
}

/// Same as [`count_monomials`], saturated at `u64::MAX`.
pub fn count_monomials_saturating(num_vars: usize, d: u64) -> u64 {
    if num_vars == 0 {
        return u64::from(d == 0);
    }
    binomial_u64(num_vars as u64 - 1 + d, d).unwrap_or(u64::MAX)
}

/// The `k`-th lex-smallest degree-`d` monomial of `K[x_0, ..., x_n]`
/// (`k` is 1-based, so `k = 1` gives `x_n^d`).
pub fn lex_last_monomial(n: usize, d: u64, k: &BigUint) -> Result<Monomial> {
    let num_vars = n + 1;
    let total = count_monomials(num_vars, d);
    if k.is_zero() || *k > total {
        return Err(Error::OutOfRange { what: "monomial rank", value: k.to_string(), allowed: format!("1..={total}") });
    }
    let mut exponents = vec![0u32; num_vars];
    let mut k = k.clone();
    let mut rest = d;
    for (i, slot) in exponents.iter_mut().enumerate().take(n) {
        let after = n - i;
        let mut a = 0u64;
        loop {
            let block = count_monomials(after, rest - a);
            if k <= block {
                break;
            }
            k -= block;
            a += 1;
        }
        *slot = a as u32;
        rest -= a;
    }
    exponents[n] = rest as u32;
    Ok(Monomial { exponents })
}

/// Streams the degree-`d` monomials of `K[x_0, ..., x_n]` in ascending lex order.
#[derive(Debug, Clone)]
pub struct LexAscending {
    next: Option<Vec<u32>>,
}

impl LexAscending {
    pub fn new(n: usize, d: u64) -> Self {
        let mut start = vec![0u32; n + 1];
        start[n] = d as u32;
        LexAscending { next: Some(start) }
    }
}

impl Iterator for LexAscending {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if successor_in_place(&mut succ) {
            self.next = Some(succ);
        }
        Some(Monomial { exponents: current })
    }
}

/// Cumulative `V_q[d, l]` for one degree `d`, every `q` in `0..=n`, and
/// `l` in `0..=l_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VTable {
    n: usize,
    degree: u64,
    l_max: u64,
    /// Row-major by `l`: entry `(l, q)` at `l * (n + 1) + q`.
    values: Vec<u64>,
}

impl VTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn l_max(&self) -> u64 {
        self.l_max
    }

    pub fn get(&self, q: usize, l: u64) -> u64 {
        self.values[l as usize * (self.n + 1) + q]
    }

    /// `(V_0[d, l], ..., V_n[d, l])`.
    pub fn row(&self, l: u64) -> &[u64] {
        let w = self.n + 1;
        &self.values[l as usize * w..(l as usize + 1) * w]
    }
}

/// `C(n+1, q+1) - C(i+1, q+1)` for every `q`, as the weight of a standard
/// monomial with max index `i`.
pub(crate) fn maxi_weights(n: usize) -> Result<Vec<Vec<u64>>> {
    let mut weights = Vec::with_capacity(n + 1);
    for i in 0..=n as u64 {
        let mut row = Vec::with_capacity(n + 1);
        for q in 0..=n as u64 {
            let top = binomial_u64(n as u64 + 1, q + 1).ok_or(Error::Overflow("V table weight"))?;
            let own = binomial_u64(i + 1, q + 1).ok_or(Error::Overflow("V table weight"))?;
            row.push(top - own);
        }
        weights.push(row);
    }
    Ok(weights)
}

/// One streaming pass over the `l_max` lex-last monomials of degree `d`.
pub fn v_table(n: usize, d: u64, l_max: u64) -> Result<VTable> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(0));
    }
    let total = count_monomials(n + 1, d);
    if BigUint::from(l_max) > total {
        return Err(Error::OutOfRange {
            what: "V table length",
            value: l_max.to_string(),
            allowed: format!("0..={total}"),
        });
    }
    let width = n + 1;
    let len = usize::try_from(l_max)
        .ok()
        .and_then(|l| l.checked_add(1))
        .and_then(|l| l.checked_mul(width))
        .ok_or(Error::Overflow("V table size"))?;
    let weights = maxi_weights(n)?;
    let mut values = Vec::with_capacity(len);
    values.extend(std::iter::repeat_n(0, width));
    let mut acc = vec![0u64; width];
    for m in LexAscending::new(n, d).take(l_max as usize) {
        let i = m.max_index()?;
        for (a, w) in acc.iter_mut().zip(&weights[i]) {
            *a = a.checked_add(*w).ok_or(Error::Overflow("V table entry"))?;
        }
        values.extend_from_slice(&acc);
    }
    Ok(VTable { n, degree: d, l_max, values })
}
