//! Exact integer combinatorics: binomial coefficients, Macaulay
//! representations and the growth bounds derived from them, and Gotzmann
//! decompositions of Hilbert polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Keys above this stay out of the memo table; the greedy search in
/// [`macaulay_rep`] would otherwise fill it with one-off entries.
const MEMO_LIMIT: u64 = 4096;

fn memo() -> &'static RwLock<HashMap<(u64, u64), BigUint>> {
    static TABLE: OnceLock<RwLock<HashMap<(u64, u64), BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn binomial_product(a: u64, b: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `C(a, b)` for arbitrary integers, zero when `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < b {
        return BigUint::zero();
    }
    let (a, b) = (a as u64, b as u64);
    let b = b.min(a - b);
    if b == 0 {
        return BigUint::one();
    }
    if a > MEMO_LIMIT {
        return binomial_product(a, b);
    }
    if let Some(hit) = memo().read().expect("binomial memo poisoned").get(&(a, b)) {
        return hit.clone();
    }
    let value = binomial_product(a, b);
    memo().write().expect("binomial memo poisoned").entry((a, b)).or_insert(value).clone()
}

/// `C(a, b)` as a `u64`, or `None` when it does not fit.
pub fn binomial_u64(a: u64, b: u64) -> Option<u64> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * u128::from(a - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(a, b)` if it is at most `cap`, otherwise `cap + 1`.
///
/// The partial products `C(a, i)` grow with `i` up to `min(b, a - b)`, so
/// the loop may stop as soon as one exceeds `cap`.
fn binomial_capped(a: u64, b: u64, cap: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * u128::from(a - i) / u128::from(i + 1);
        if acc > u128::from(cap) {
            return cap.saturating_add(1);
        }
    }
    acc as u64
}

/// The degree-`d` Macaulay representation `a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)`
/// with `k_d > k_{d-1} > ... > k_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MacaulayRep {
    degree: u32,
    /// `(k_i, i)` pairs, `i` descending.
    terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|&(k, i)| binomial(k as i64, i64::from(i))).sum()
    }

    /// `a^<d>`: the largest value an O-sequence can take in degree `d + 1`.
    pub fn upper(&self) -> BigUint {
        self.terms.iter().map(|&(k, i)| binomial(k as i64 + 1, i64::from(i) + 1)).sum()
    }

    /// `a_<d>`: the smallest value an O-sequence can take in degree `d - 1`.
    pub fn lower(&self) -> u64 {
        self.terms
            .iter()
            .map(|&(k, i)| binomial_u64(k - 1, u64::from(i) - 1).expect("bounded by the represented value"))
            .sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, i)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({k},{i})")?;
        }
        Ok(())
    }
}

fn check_degree(d: i64) -> Result<u32> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    u32::try_from(d).map_err(|_| Error::OutOfRange {
        what: "degree",
        value: d.to_string(),
        allowed: format!("1..={}", u32::MAX),
    })
}

/// Greedy degree-`d` Macaulay representation of `a`.
pub fn macaulay_rep(a: u64, d: i64) -> Result<MacaulayRep> {
    let degree = check_degree(d)?;
    let mut terms = Vec::new();
    let mut rest = a;
    let mut i = u64::from(degree);
    while rest > 0 && i >= 1 {
        if rest <= i {
            // C(i, i) = 1 is the greedy choice for every remaining unit.
            terms.extend((0..rest).map(|t| (i - t, (i - t) as u32)));
            break;
        }
        // Largest k with C(k, i) <= rest; C(k, i) >= k - i + 1 bounds the search.
        let (mut lo, mut hi) = (i, rest + i - 1);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if binomial_capped(mid, i, rest) <= rest {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        terms.push((lo, i as u32));
        rest -= binomial_capped(lo, i, rest);
        i -= 1;
    }
    Ok(MacaulayRep { degree, terms })
}

/// `a^<d>`, the Macaulay upper bound in degree `d + 1`.
pub fn macaulay_upper_bound(a: u64, d: i64) -> Result<BigUint> {
    Ok(macaulay_rep(a, d)?.upper())
}

/// `a_<d>`, the Macaulay lower bound in degree `d - 1`.
pub fn macaulay_lower_bound(a: u64, d: i64) -> Result<u64> {
    Ok(macaulay_rep(a, d)?.lower())
}

/// A numerical polynomial in `d` with exact rational coefficients in the
/// power basis, lowest degree first.
///
/// Serialized as coefficient strings, leading term first, e.g.
/// `["3", "-6", "175"]` or `["1/2", "3/2", "1"]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coefficients: Vec<BigRational>,
}

impl Serialize for HilbertPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coefficients.iter().rev().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for HilbertPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let text = Vec::<String>::deserialize(deserializer)?;
        let coefficients = text
            .iter()
            .map(|c| c.trim().parse::<BigRational>().map_err(|_| D::Error::custom(format!("not a rational: {c:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        HilbertPolynomial::from_descending(coefficients).map_err(D::Error::custom)
    }
}

impl HilbertPolynomial {
    /// Coefficients ordered from the constant term upward.
    pub fn new(coefficients: Vec<BigRational>) -> Result<Self> {
        let mut coefficients = coefficients;
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        let p = HilbertPolynomial { coefficients };
        // Integer values at deg + 1 consecutive integers force integer values everywhere.
        for d in 0..=p.degree().unwrap_or(0) {
            if !p.eval_rational(&BigRational::from_integer(BigInt::from(d))).is_integer() {
                return Err(Error::NotHilbertPolynomial(format!("value at d = {d} is not an integer")));
            }
        }
        Ok(p)
    }

    /// Coefficients ordered from the leading term down, e.g. `[3, -6, 175]`
    /// for `3d^2 - 6d + 175`.
    pub fn from_descending(coefficients: Vec<BigRational>) -> Result<Self> {
        let mut coefficients = coefficients;
        coefficients.reverse();
        Self::new(coefficients)
    }

    pub fn constant(c: u64) -> Self {
        HilbertPolynomial::new(vec![BigRational::from_integer(BigInt::from(c))])
            .expect("integer constants are integer valued")
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.coefficients.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coefficients[0].to_integer()),
            _ => None,
        }
    }

    fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, d: i64) -> BigInt {
        self.eval_rational(&BigRational::from_integer(BigInt::from(d))).to_integer()
    }

    /// Value at `d` as a nonnegative machine integer.
    pub fn eval_u64(&self, d: i64) -> Result<u64> {
        let v = self.eval(d);
        if v.is_negative() {
            return Err(Error::NotHilbertPolynomial(format!("negative value {v} at d = {d}")));
        }
        v.to_u64().ok_or(Error::Overflow("Hilbert polynomial value"))
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let show_coeff = power == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "{}d", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}d^{power}", if show_coeff { "*" } else { "" })?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Gotzmann decomposition `p(d) = sum_i C(d + a_i - i + 1, a_i)` with
/// `a_1 >= a_2 >= ... >= a_r >= 0`, stored run-length encoded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotzmannForm {
    /// `(a, multiplicity)`, `a` strictly descending.
    runs: Vec<(u32, u64)>,
}

impl GotzmannForm {
    pub fn runs(&self) -> &[(u32, u64)] {
        &self.runs
    }

    /// Number of binomial terms, i.e. the Gotzmann number.
    pub fn len(&self) -> u64 {
        self.runs.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// `(a_i, i)` for every term, `i` starting at 1.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.runs.iter().flat_map(|&(a, m)| std::iter::repeat_n(a, m as usize)).zip(1..)
    }

    pub fn eval(&self, d: i64) -> BigInt {
        let mut total = BigInt::zero();
        let mut index: i64 = 0;
        for &(a, m) in &self.runs {
            if a == 0 {
                total += BigInt::from(m);
                index += m as i64;
                continue;
            }
            for _ in 0..m {
                index += 1;
                total += poly_binomial(BigInt::from(d + i64::from(a) - index + 1), a);
            }
        }
        total
    }
}

/// The binomial `C(x, a) = x (x - 1) ... (x - a + 1) / a!` as a polynomial in `x`,
/// evaluated at any integer `x`.
fn poly_binomial(x: BigInt, a: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..a {
        num *= &x - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Power-basis coefficients of `C(d + shift, a)` as a polynomial in `d`.
fn binomial_in_d(shift: i64, a: u32) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for t in 0..a {
        // multiply by (d + shift - t)
        let root = BigRational::from_integer(BigInt::from(shift - i64::from(t)));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * &root;
        }
        poly = next;
    }
    let fact: BigInt = (1..=a).map(BigInt::from).product();
    let fact = BigRational::from_integer(fact);
    poly.into_iter().map(|c| c / &fact).collect()
}

pub const DEFAULT_GOTZMANN_CEILING: u64 = 1_000_000;

/// Peel leading binomials off `p` until nothing is left.
pub fn gotzmann_form(p: &HilbertPolynomial) -> Result<GotzmannForm> {
    gotzmann_form_with_ceiling(p, DEFAULT_GOTZMANN_CEILING)
}

pub fn gotzmann_form_with_ceiling(p: &HilbertPolynomial, ceiling: u64) -> Result<GotzmannForm> {
    let mut rest: Vec<BigRational> = p.coefficients().to_vec();
    let mut runs: Vec<(u32, u64)> = Vec::new();
    let mut count: u64 = 0;
    loop {
        while rest.last().is_some_and(Zero::is_zero) {
            rest.pop();
        }
        let Some(lead) = rest.last().cloned() else {
            break;
        };
        let a = (rest.len() - 1) as u32;
        // Every term with this a contributes 1/a! to the leading coefficient.
        let fact: BigInt = (1..=a).map(BigInt::from).product();
        let terms = lead * BigRational::from_integer(fact);
        if !terms.is_integer() || !terms.is_positive() {
            return Err(Error::NotHilbertPolynomial(format!(
                "leading coefficient does not peel into binomials of degree {a}"
            )));
        }
        let terms =
            terms.to_integer().to_u64().filter(|t| count.checked_add(*t).is_some_and(|c| c <= ceiling)).ok_or_else(
                || Error::NotHilbertPolynomial(format!("Gotzmann decomposition exceeds {ceiling} terms")),
            )?;
        if a == 0 {
            runs.push((0, terms));
            break;
        }
        for _ in 0..terms {
            count += 1;
            let shift = i64::from(a) - count as i64 + 1;
            for (i, c) in binomial_in_d(shift, a).into_iter().enumerate() {
                rest[i] -= c;
            }
        }
        if rest.len() == a as usize + 1 && !rest[a as usize].is_zero() {
            return Err(Error::NotHilbertPolynomial("leading term did not cancel".into()));
        }
        runs.push((a, terms));
    }
    Ok(GotzmannForm { runs })
}

/// The number of terms in the Gotzmann decomposition of `p`.
pub fn gotzmann_number(p: &HilbertPolynomial) -> Result<u64> {
    Ok(gotzmann_form(p)?.len())
}
