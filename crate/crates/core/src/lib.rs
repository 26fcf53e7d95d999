//! Sharp upper bounds for the total Betti numbers of saturated ideals whose
//! Hilbert functions obey lower and upper bounds.
//!
//! A saturated ideal of `S = K[x_0, ..., x_{n+1}]` is replaced by a
//! lexsegment ideal of `R = K[x_0, ..., x_n]` with the first difference of
//! its Hilbert function, whose Betti numbers depend additively on that
//! difference. Maximizing them becomes a dynamic program over degree-wise
//! difference values; [`dp`] runs it and [`betti::finalize`] turns the
//! maxima into Betti numbers.
//!
//! ```
//! use maxbetti::{build_spec, finalize, solve, AlgorithmChoice, BoundLists, HilbertPolynomial, ResultsMode};
//!
//! // quotients of K[x_1..x_4] with Hilbert polynomial 4
//! let spec = build_spec(4, &BoundLists::default(), Some(&HilbertPolynomial::constant(4))).unwrap();
//! let raw = solve(&spec, AlgorithmChoice::Automatic, ResultsMode::One).unwrap();
//! let result = finalize(&raw, &spec).unwrap();
//! assert_eq!(result.betti_upper_bound.len(), 3);
//! ```

pub mod betti;
pub mod cli;
pub mod constraints;
pub mod dp;
pub mod error;
pub mod macaulay;
pub mod monomials;
pub mod oracle;

pub use betti::{
    almost_lex_ideal, betti_offsets, canonical_reference, ek_graded_betti, finalize, lex_ideal_generators, BettiTable,
    Convention, MaxBettiResult, MonomialIdeal,
};
pub use constraints::{build_spec, choose_algorithm, Algorithm, AlgorithmChoice, BoundLists, ConstraintSpec, Tail};
pub use dp::{pareto_insert, run, run_complete, run_simplified, solve, Limits, RawDPResult, ResultsMode, ValueVector};
pub use error::{Error, Result};
pub use macaulay::{
    binomial, gotzmann_number, macaulay_lower_bound, macaulay_rep, macaulay_upper_bound, HilbertPolynomial, MacaulayRep,
};
pub use monomials::{count_monomials, lex_last_monomial, v_table, Monomial, VTable};
pub use oracle::{brute_force_result, enumerate_tuples, FamilyKind};
