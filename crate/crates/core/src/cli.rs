//! Request and response documents and the commands behind the binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::betti::{almost_lex_ideal, finalize, BettiEntry, Convention, MaxBettiResult};
use crate::constraints::{build_spec, Algorithm, AlgorithmChoice, BoundLists, ConstraintSpec};
use crate::dp::{solve, ResultsMode};
use crate::error::Error;
use crate::macaulay::HilbertPolynomial;
use crate::oracle::brute_force_result;

/// A rational written as an integer or as `"a/b"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Integer(i64),
    Text(String),
}

impl RationalInput {
    pub fn to_rational(&self) -> Result<BigRational, Error> {
        match self {
            RationalInput::Integer(v) => Ok(BigRational::from_integer(BigInt::from(*v))),
            RationalInput::Text(s) => parse_rational(s),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A Hilbert polynomial: a constant, or coefficients from the leading one
/// down to the constant term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolynomialInput {
    Constant(u64),
    Descending(Vec<RationalInput>),
}

impl PolynomialInput {
    pub fn to_polynomial(&self) -> Result<HilbertPolynomial, Error> {
        match self {
            PolynomialInput::Constant(c) => Ok(HilbertPolynomial::constant(*c)),
            PolynomialInput::Descending(cs) => {
                HilbertPolynomial::from_descending(cs.iter().map(RationalInput::to_rational).collect::<Result<_, _>>()?)
            }
        }
    }
}

/// Parse `"3,-6,175"` (leading coefficient first) or `"1/2,3/2,1"`.
pub fn parse_polynomial(text: &str) -> Result<HilbertPolynomial, Error> {
    let coefficients = text.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    HilbertPolynomial::from_descending(coefficients)
}

/// A bound list: positional with `null` gaps, or a degree-to-value map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundListInput {
    Positional(Vec<Option<u64>>),
    Sparse(BTreeMap<String, u64>),
}

impl Default for BoundListInput {
    fn default() -> Self {
        BoundListInput::Positional(Vec::new())
    }
}

impl BoundListInput {
    pub fn resolve(&self) -> Result<Vec<Option<u64>>, Error> {
        match self {
            BoundListInput::Positional(v) => Ok(v.clone()),
            BoundListInput::Sparse(map) => {
                let mut out = Vec::new();
                for (k, &v) in map {
                    let d: usize = k.trim().parse().map_err(|_| Error::InvalidInput(format!("not a degree: {k:?}")))?;
                    if out.len() <= d {
                        out.resize(d + 1, None);
                    }
                    out[d] = Some(v);
                }
                Ok(out)
            }
        }
    }
}

/// Parse a positional list with empty gaps, e.g. `",,,8,8,5,5"`.
pub fn parse_bound_list(text: &str) -> Result<Vec<Option<u64>>, Error> {
    let text = text.trim().trim_start_matches('{').trim_end_matches('}');
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            if item.is_empty() {
                Ok(None)
            } else {
                item.parse().map(Some).map_err(|_| Error::InvalidInput(format!("not a bound: {item:?}")))
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestDocument {
    pub variables: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_polynomial: Option<PolynomialInput>,
    #[serde(default)]
    pub hf_lower: BoundListInput,
    #[serde(default)]
    pub hf_upper: BoundListInput,
    #[serde(default)]
    pub diff_lower: BoundListInput,
    #[serde(default)]
    pub diff_upper: BoundListInput,
    #[serde(default)]
    pub algorithm: AlgorithmChoice,
    #[serde(default)]
    pub results: ResultsMode,
    #[serde(default)]
    pub verify: bool,
}

impl RequestDocument {
    pub fn new(variables: usize) -> Self {
        RequestDocument {
            variables,
            hilbert_polynomial: None,
            hf_lower: BoundListInput::default(),
            hf_upper: BoundListInput::default(),
            diff_lower: BoundListInput::default(),
            diff_upper: BoundListInput::default(),
            algorithm: AlgorithmChoice::Automatic,
            results: ResultsMode::None,
            verify: false,
        }
    }

    pub fn spec(&self) -> Result<ConstraintSpec, Error> {
        let lists = BoundLists {
            hf_lower: self.hf_lower.resolve()?,
            hf_upper: self.hf_upper.resolve()?,
            diff_lower: self.diff_lower.resolve()?,
            diff_upper: self.diff_upper.resolve()?,
        };
        let p = self.hilbert_polynomial.as_ref().map(PolynomialInput::to_polynomial).transpose()?;
        build_spec(self.variables, &lists, p.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResponseDocument {
    pub spec: ConstraintSpec,
    pub results: ResultsMode,
    #[serde(flatten)]
    pub result: MaxBettiResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub timing_ms: f64,
}

/// Failure of a command, with the process exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Solver(#[from] Error),
    #[error(
        "verification failed: the solver and the brute-force oracle disagree\nsolver: {solver:?}\noracle: {oracle:?}"
    )]
    VerifyMismatch { solver: Box<MaxBettiResult>, oracle: Box<MaxBettiResult> },
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Solver(
                Error::InconsistentConstraints { .. }
                | Error::NotOSequence { .. }
                | Error::NoHorizon
                | Error::NotHilbertPolynomial(_)
                | Error::NonPositiveDegree(_)
                | Error::OutOfRange { .. }
                | Error::InvalidInput(_),
            ) => 2,
            CommandError::Solver(Error::EmptyFamily) => 3,
            CommandError::VerifyMismatch { .. } => 4,
            CommandError::Solver(_) => 1,
        }
    }
}

/// Build the spec, pick the algorithm, run it, and finalize.
pub fn solve_command(request: &RequestDocument) -> Result<ResponseDocument, CommandError> {
    let start = Instant::now();
    let spec = request.spec()?;
    let raw = solve(&spec, request.algorithm, request.results)?;
    let algorithm = raw.algorithm;
    let result = finalize(&raw, &spec)?;
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    let verified = if request.verify {
        let oracle = brute_force_result(&spec, algorithm.into(), request.results)?;
        if oracle != result {
            return Err(CommandError::VerifyMismatch { solver: Box::new(result), oracle: Box::new(oracle) });
        }
        Some(true)
    } else {
        None
    };
    Ok(ResponseDocument { spec, results: request.results, result, verified, timing_ms })
}

fn braces(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Human-readable summary of a response.
pub fn render_response(response: &ResponseDocument) -> String {
    let r = &response.result;
    let mut out = String::new();
    let algorithm = match r.algorithm {
        Algorithm::Simplified => "simplified",
        Algorithm::Complete => "complete",
    };
    let _ = writeln!(out, "algorithm:          {algorithm}");
    let _ = writeln!(out, "horizon:            {}", response.spec.horizon());
    let _ = writeln!(out, "betti upper bound:  {}", braces(&r.betti_upper_bound));
    let _ = writeln!(out, "maximum betti sum:  {}", r.maximum_betti_sum);
    let _ = writeln!(out, "realizable:         {}", r.is_realizable);
    if let Some(ms) = &r.maximal_betti_numbers {
        let _ = writeln!(out, "maximal betti numbers ({}):", ms.len());
        for m in ms {
            let _ = writeln!(out, "  {}", braces(m));
        }
    }
    if let Some(hs) = &r.hilbert_functions {
        let _ = writeln!(out, "hilbert functions ({}):", hs.len());
        for h in hs {
            let _ = writeln!(out, "  {}", braces(h));
        }
    }
    if let Some(v) = response.verified {
        let _ = writeln!(out, "verified:           {v}");
    }
    let _ = writeln!(out, "time:               {:.3} ms", response.timing_ms);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub variables: usize,
    /// Generators as exponent vectors over `x1, ..., xN`.
    pub generators: Vec<Vec<u32>>,
    /// Generators as power products.
    pub generator_strings: Vec<String>,
    /// Total Betti numbers of the quotient.
    pub totals: Vec<u64>,
    /// Graded Betti numbers of the quotient.
    pub betti: Vec<BettiEntry>,
    #[serde(skip)]
    pub table_text: String,
}

/// Lexsegment ideal and quotient Betti table for a Hilbert function.
pub fn ideal_command(variables: usize, h: &[u64]) -> Result<IdealReport, CommandError> {
    let (ideal, table) = almost_lex_ideal(variables, h)?;
    Ok(IdealReport {
        variables,
        generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
        generator_strings: ideal.generators().iter().map(ToString::to_string).collect(),
        totals: table.quotient_totals(),
        betti: table.entries(Convention::Quotient),
        table_text: table.render_quotient(),
    })
}

pub fn render_ideal(report: &IdealReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "generators ({}):", report.generators.len());
    for g in &report.generator_strings {
        let _ = writeln!(out, "  {g}");
    }
    let _ = writeln!(out, "betti table:");
    out.push_str(&report.table_text);
    out
}

/// One line of the constant-polynomial sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub polynomial: u64,
    pub algorithm: Algorithm,
    pub seconds: f64,
    pub maximum_betti_sum: u64,
}

/// Time the solver on constant Hilbert polynomials `from..=to` in
/// `variables` variables.
pub fn bench_command(
    variables: usize,
    from: u64,
    to: u64,
    choice: AlgorithmChoice,
    mut each: impl FnMut(&BenchRow),
) -> Result<Vec<BenchRow>, CommandError> {
    let mut rows = Vec::new();
    for p in from..=to {
        let mut request = RequestDocument::new(variables);
        request.hilbert_polynomial = Some(PolynomialInput::Constant(p));
        request.algorithm = choice;
        let start = Instant::now();
        let response = solve_command(&request)?;
        let row = BenchRow {
            polynomial: p,
            algorithm: response.result.algorithm,
            seconds: start.elapsed().as_secs_f64(),
            maximum_betti_sum: response.result.maximum_betti_sum,
        };
        each(&row);
        rows.push(row);
    }
    Ok(rows)
}

pub fn bench_csv_header() -> &'static str {
    "polynomial,algorithm,seconds,maximum_betti_sum"
}

pub fn bench_csv_line(row: &BenchRow) -> String {
    let algorithm = match row.algorithm {
        Algorithm::Simplified => "simplified",
        Algorithm::Complete => "complete",
    };
    format!("{},{},{:.6},{}", row.polynomial, algorithm, row.seconds, row.maximum_betti_sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positional_lists_with_gaps() {
        assert_eq!(parse_bound_list(",,,8,8,5,5").unwrap(), vec![None, None, None, Some(8), Some(8), Some(5), Some(5)]);
        assert_eq!(parse_bound_list("{,,,8}").unwrap(), vec![None, None, None, Some(8)]);
        assert_eq!(parse_bound_list("").unwrap(), Vec::<Option<u64>>::new());
        assert!(parse_bound_list("1,x").is_err());
    }

    #[test]
    fn sparse_and_positional_agree() {
        let sparse: BoundListInput = serde_json::from_str(r#"{"3": 8, "6": 5}"#).unwrap();
        let positional: BoundListInput = serde_json::from_str("[null, null, null, 8, null, null, 5]").unwrap();
        assert_eq!(sparse.resolve().unwrap(), positional.resolve().unwrap());
    }

    #[test]
    fn polynomial_inputs() {
        let p = parse_polynomial("3,-6,175").unwrap();
        assert_eq!(p.eval(170), BigInt::from(85855));
        let half = parse_polynomial("1/2,3/2,1").unwrap();
        assert_eq!(half.eval(2), BigInt::from(6));
        assert!(parse_polynomial("1/2,0").is_err());
        let json: PolynomialInput = serde_json::from_str(r#"[3, -6, "175"]"#).unwrap();
        assert_eq!(json.to_polynomial().unwrap(), p);
    }

    #[test]
    fn exit_codes() {
        let mut r = RequestDocument::new(5);
        r.hilbert_polynomial = Some(PolynomialInput::Constant(10));
        r.hf_lower = BoundListInput::Positional(vec![None, None, None, Some(9)]);
        r.hf_upper = BoundListInput::Positional(vec![None, None, None, Some(4)]);
        let err = solve_command(&r).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("degree 3"));
        assert_eq!(ideal_command(3, &[1, 10]).unwrap_err().exit_code(), 2);
    }
}
