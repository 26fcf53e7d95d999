//! Constraint specifications `(G, F, g, f)` on the Hilbert function of
//! `S/I` and its first difference, plus algorithm selection.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::dp::ResultsMode;
use crate::error::{Error, Result};
use crate::macaulay::{gotzmann_number, HilbertPolynomial};
use crate::monomials::count_monomials_saturating;

/// Partial per-degree bound lists; `None` requests the trivial bound.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundLists {
    pub hf_lower: Vec<Option<u64>>,
    pub hf_upper: Vec<Option<u64>>,
    pub diff_lower: Vec<Option<u64>>,
    pub diff_upper: Vec<Option<u64>>,
}

impl BoundLists {
    fn last_constrained(&self) -> Option<usize> {
        [&self.hf_lower, &self.hf_upper, &self.diff_lower, &self.diff_upper]
            .into_iter()
            .filter_map(|list| list.iter().rposition(Option::is_some))
            .max()
    }

    fn set(list: &mut Vec<Option<u64>>, degree: usize, value: u64) {
        if list.len() <= degree {
            list.resize(degree + 1, None);
        }
        list[degree] = Some(value);
    }

    /// Pin `h(degree) = value`.
    pub fn fix_hf(mut self, degree: usize, value: u64) -> Self {
        Self::set(&mut self.hf_lower, degree, value);
        Self::set(&mut self.hf_upper, degree, value);
        self
    }

    pub fn hf_lower(mut self, degree: usize, value: u64) -> Self {
        Self::set(&mut self.hf_lower, degree, value);
        self
    }

    pub fn hf_upper(mut self, degree: usize, value: u64) -> Self {
        Self::set(&mut self.hf_upper, degree, value);
        self
    }

    pub fn diff_lower(mut self, degree: usize, value: u64) -> Self {
        Self::set(&mut self.diff_lower, degree, value);
        self
    }

    pub fn diff_upper(mut self, degree: usize, value: u64) -> Self {
        Self::set(&mut self.diff_upper, degree, value);
        self
    }
}

/// Values of `h` from the horizon on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tail {
    /// `h(d) = c` for every `d >= D`.
    Constant(u64),
    /// `h(d) = p(d)` for every `d >= D`.
    Polynomial(HilbertPolynomial),
}

impl Tail {
    pub fn hf(&self, d: usize) -> Result<u64> {
        match self {
            Tail::Constant(c) => Ok(*c),
            Tail::Polynomial(p) => p.eval_u64(d as i64),
        }
    }

    /// `Δh(d)` for `d` past the horizon.
    pub fn diff(&self, d: usize) -> Result<u64> {
        match self {
            Tail::Constant(_) => Ok(0),
            Tail::Polynomial(p) => {
                let delta: BigInt = p.eval(d as i64) - p.eval(d as i64 - 1);
                if delta.is_negative() {
                    return Err(Error::NotHilbertPolynomial(format!("first difference is negative at d = {d}")));
                }
                delta.to_u64().ok_or(Error::Overflow("tail difference"))
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        match self {
            Tail::Constant(_) => true,
            Tail::Polynomial(p) => p.degree().unwrap_or(0) == 0,
        }
    }
}

/// Fully resolved bounds through the horizon `D`.
///
/// Defaults above `u64::MAX` are saturated; no reachable Hilbert function
/// gets near them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSpec {
    variables: usize,
    horizon: usize,
    hf_lower: Vec<u64>,
    hf_upper: Vec<u64>,
    diff_lower: Vec<u64>,
    diff_upper: Vec<u64>,
    tail: Tail,
}

impl ConstraintSpec {
    /// Number of variables `N` of `S`.
    pub fn variables(&self) -> usize {
        self.variables
    }

    /// `n = N - 2`; `R = K[x_0, ..., x_n]`.
    pub fn n(&self) -> usize {
        self.variables - 2
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// `G(d)`.
    pub fn hf_lower(&self) -> &[u64] {
        &self.hf_lower
    }

    /// `F(d)`.
    pub fn hf_upper(&self) -> &[u64] {
        &self.hf_upper
    }

    /// `g(d)`.
    pub fn diff_lower(&self) -> &[u64] {
        &self.diff_lower
    }

    /// `f(d)`.
    pub fn diff_upper(&self) -> &[u64] {
        &self.diff_upper
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// `h(D)`, the common value of `G` and `F` at the horizon.
    pub fn terminal_value(&self) -> u64 {
        self.hf_lower[self.horizon]
    }

    /// `h_S(d)`, saturated.
    pub fn ambient_hf(&self, d: usize) -> u64 {
        count_monomials_saturating(self.variables, d as u64)
    }

    /// `h_R(d)`, saturated.
    pub fn ambient_diff(&self, d: usize) -> u64 {
        count_monomials_saturating(self.variables - 1, d as u64)
    }

    /// True when the upper bound on `h` is trivial below the horizon.
    pub fn hf_upper_is_trivial(&self) -> bool {
        (0..self.horizon).all(|d| self.hf_upper[d] == self.ambient_hf(d))
    }

    /// True when both bounds on `Δh` are trivial in every degree.
    pub fn diff_bounds_are_trivial(&self) -> bool {
        (0..=self.horizon).all(|d| self.diff_lower[d] == 0 && self.diff_upper[d] >= self.ambient_diff(d))
    }

    /// True when maximizing over all numeric functions in the bounds gives
    /// the same maxima as maximizing over Hilbert functions: the upper bound
    /// on `h` and both bounds on `Δh` are trivial.
    ///
    /// A nontrivial bound on `Δh` can break this even with `F` trivial, e.g.
    /// `N = 3`, `h(5) = 8`, `1 <= Δh(2), Δh(3)`, `Δh(1), Δh(2), Δh(4), Δh(5) <= 2`.
    pub fn simplified_is_exact(&self) -> bool {
        self.hf_upper_is_trivial() && self.diff_bounds_are_trivial()
    }

    /// The same family with the horizon moved out to `new_horizon`.
    ///
    /// Degrees between the old and new horizon get the tail values as
    /// pinned `h` and default difference bounds.
    pub fn with_horizon(&self, new_horizon: usize) -> Result<ConstraintSpec> {
        if new_horizon < self.horizon {
            return Err(Error::InvalidInput(format!("horizon can only grow: {new_horizon} < {}", self.horizon)));
        }
        let mut spec = self.clone();
        for d in self.horizon + 1..=new_horizon {
            let v = self.tail.hf(d)?;
            spec.hf_lower.push(v);
            spec.hf_upper.push(v);
            spec.diff_lower.push(0);
            spec.diff_upper.push(self.ambient_diff(d));
        }
        spec.horizon = new_horizon;
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        for d in 0..=self.horizon {
            if self.hf_lower[d] > self.hf_upper[d] {
                return Err(Error::InconsistentConstraints {
                    degree: d,
                    detail: format!(
                        "lower bound {} on h exceeds upper bound {} (h_S({d}) = {})",
                        self.hf_lower[d],
                        self.hf_upper[d],
                        self.ambient_hf(d)
                    ),
                });
            }
            if self.diff_lower[d] > self.diff_upper[d] {
                return Err(Error::InconsistentConstraints {
                    degree: d,
                    detail: format!(
                        "lower bound {} on the difference exceeds upper bound {} (h_R({d}) = {})",
                        self.diff_lower[d],
                        self.diff_upper[d],
                        self.ambient_diff(d)
                    ),
                });
            }
        }
        let d = self.horizon + 1;
        let delta = self.tail.diff(d)?;
        if delta > self.ambient_diff(d) {
            return Err(Error::InconsistentConstraints {
                degree: d,
                detail: format!("tail difference {delta} exceeds h_R({d})"),
            });
        }
        Ok(())
    }
}

/// Resolve partial bounds and an optional Hilbert polynomial into a full
/// [`ConstraintSpec`].
pub fn build_spec(
    variables: usize,
    bounds: &BoundLists,
    polynomial: Option<&HilbertPolynomial>,
) -> Result<ConstraintSpec> {
    if variables < 2 {
        return Err(Error::OutOfRange {
            what: "number of variables",
            value: variables.to_string(),
            allowed: ">= 2".into(),
        });
    }
    let last = bounds.last_constrained();
    let (horizon, tail) = match polynomial {
        Some(p) => {
            let gotzmann = usize::try_from(gotzmann_number(p)?).map_err(|_| Error::Overflow("Gotzmann number"))?;
            let horizon = last.map_or(gotzmann, |l| gotzmann.max(l + 1));
            (horizon, Tail::Polynomial(p.clone()))
        }
        None => {
            let last = last.ok_or(Error::NoHorizon)?;
            let lower = bounds.hf_lower.get(last).copied().flatten();
            let upper = bounds.hf_upper.get(last).copied().flatten();
            match (lower, upper) {
                (Some(a), Some(b)) if a == b => (last, Tail::Constant(a)),
                _ => return Err(Error::NoHorizon),
            }
        }
    };

    let pick = |list: &[Option<u64>], d: usize| list.get(d).copied().flatten();
    let mut spec = ConstraintSpec {
        variables,
        horizon,
        hf_lower: Vec::with_capacity(horizon + 1),
        hf_upper: Vec::with_capacity(horizon + 1),
        diff_lower: Vec::with_capacity(horizon + 1),
        diff_upper: Vec::with_capacity(horizon + 1),
        tail,
    };
    for d in 0..=horizon {
        let h_s = spec.ambient_hf(d);
        let h_r = spec.ambient_diff(d);
        let (lo, hi) = if d == horizon {
            let v = spec.tail.hf(d)?;
            let user_lo = pick(&bounds.hf_lower, d).unwrap_or(0);
            let user_hi = pick(&bounds.hf_upper, d).unwrap_or(u64::MAX);
            if v < user_lo || v > user_hi {
                return Err(Error::InconsistentConstraints {
                    degree: d,
                    detail: format!("horizon value {v} violates the requested bounds"),
                });
            }
            (v, v.min(h_s))
        } else {
            (pick(&bounds.hf_lower, d).unwrap_or(0), pick(&bounds.hf_upper, d).map_or(h_s, |v| v.min(h_s)))
        };
        spec.hf_lower.push(lo);
        spec.hf_upper.push(hi);
        spec.diff_lower.push(pick(&bounds.diff_lower, d).unwrap_or(0));
        spec.diff_upper.push(pick(&bounds.diff_upper, d).map_or(h_r, |v| v.min(h_r)));
    }
    spec.validate()?;
    Ok(spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmChoice {
    #[default]
    Automatic,
    Simplified,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Maximize over all numeric functions meeting the bounds.
    Simplified,
    /// Maximize over Hilbert functions meeting the bounds.
    Complete,
}

/// Automatic picks [`Algorithm::Simplified`] only when
/// [`ConstraintSpec::simplified_is_exact`] holds and no witnesses are
/// requested: the maxima then agree, but the simplified witnesses need not
/// be Hilbert functions. Explicit requests are returned unchanged.
pub fn choose_algorithm(spec: &ConstraintSpec, requested: AlgorithmChoice, mode: ResultsMode) -> Algorithm {
    match requested {
        AlgorithmChoice::Simplified => Algorithm::Simplified,
        AlgorithmChoice::Complete => Algorithm::Complete,
        AlgorithmChoice::Automatic if mode == ResultsMode::None && spec.simplified_is_exact() => Algorithm::Simplified,
        AlgorithmChoice::Automatic => Algorithm::Complete,
    }
}
