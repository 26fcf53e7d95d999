//! The five-variable family with Hilbert polynomial 49 and `h(6) = 41`.

mod common;

use common::{lower, worked_example};
use maxbetti::betti::{almost_lex_ideal, hilbert_values};
use maxbetti::cli::ideal_command;
use maxbetti::monomials::Monomial;
use maxbetti::oracle::{brute_force_result, FamilyKind};
use maxbetti::{choose_algorithm, finalize, run, Algorithm, AlgorithmChoice, MaxBettiResult, ResultsMode};

fn solve(algorithm: Algorithm, mode: ResultsMode) -> MaxBettiResult {
    let spec = worked_example();
    finalize(&run(&spec, algorithm, mode).unwrap(), &spec).unwrap()
}

fn hf(values: &[u64]) -> Vec<u64> {
    values.to_vec()
}

#[test]
fn automatic_choice_is_complete() {
    let spec = worked_example();
    assert_eq!(choose_algorithm(&spec, AlgorithmChoice::Automatic, ResultsMode::All), Algorithm::Complete);
}

#[test]
fn bounds_and_sum() {
    let r = solve(Algorithm::Complete, ResultsMode::None);
    assert_eq!(r.betti_upper_bound, vec![23, 54, 47, 14]);
    assert_eq!(r.maximum_betti_sum, 137);
    assert!(!r.is_realizable);
    assert_eq!(r.hilbert_functions, None);
    assert_eq!(r.maximal_betti_numbers, None);
}

#[test]
fn one_witness_lies_in_the_max_sum_set() {
    let one = solve(Algorithm::Complete, ResultsMode::One);
    let expected = hf(&[1, 5, 11, 21, 30, 36, 41, 46, 49, 49]);
    assert_eq!(one.hilbert_functions, Some(vec![expected.clone()]));
    let all_sum = solve(Algorithm::Complete, ResultsMode::AllMaxBettiSum);
    assert!(all_sum.hilbert_functions.unwrap().contains(&expected));
}

#[test]
fn all_max_sum_witnesses() {
    let r = solve(Algorithm::Complete, ResultsMode::AllMaxBettiSum);
    let hs = r.hilbert_functions.unwrap();
    assert_eq!(hs.len(), 18);
    for shown in [
        hf(&[1, 5, 11, 21, 30, 36, 41, 42, 43, 44, 45, 46, 47, 48, 49, 49]),
        hf(&[1, 5, 11, 21, 30, 36, 41, 43, 44, 45, 46, 47, 48, 49, 49]),
        hf(&[1, 5, 11, 21, 30, 36, 41, 45, 49, 49]),
        hf(&[1, 5, 11, 21, 30, 36, 41, 46, 49, 49]),
    ] {
        assert!(hs.contains(&shown), "{shown:?}");
    }
    assert_eq!(r.betti_upper_bound, vec![23, 54, 47, 14]);
    assert_eq!(r.maximum_betti_sum, 137);
}

#[test]
fn all_maximal_witnesses() {
    let r = solve(Algorithm::Complete, ResultsMode::All);
    let hs = r.hilbert_functions.unwrap();
    assert_eq!(hs.len(), 36);
    for shown in [
        hf(&[1, 5, 15, 23, 31, 36, 41, 42, 43, 44, 45, 46, 47, 48, 49, 49]),
        hf(&[1, 5, 11, 21, 30, 36, 41, 42, 43, 44, 45, 46, 47, 48, 49, 49]),
        hf(&[1, 5, 15, 23, 31, 36, 41, 46, 49, 49]),
        hf(&[1, 5, 11, 21, 30, 36, 41, 46, 49, 49]),
    ] {
        assert!(hs.contains(&shown), "{shown:?}");
    }
    assert_eq!(r.maximal_betti_numbers, Some(vec![vec![23, 54, 45, 13], vec![22, 54, 47, 14]]));
    assert!(!r.is_realizable);
}

#[test]
fn oracle_agrees_in_every_mode() {
    let spec = worked_example();
    for mode in [ResultsMode::None, ResultsMode::One, ResultsMode::AllMaxBettiSum, ResultsMode::All] {
        let dp = finalize(&run(&spec, Algorithm::Complete, mode).unwrap(), &spec).unwrap();
        let oracle = brute_force_result(&spec, FamilyKind::WithMacaulayCondition, mode).unwrap();
        assert_eq!(dp, oracle, "{mode:?}");
    }
}

const LEX_GENERATORS: [[u32; 4]; 22] = [
    [2, 0, 0, 0],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 4, 0, 0],
    [0, 3, 1, 0],
    [0, 3, 0, 1],
    [0, 2, 2, 0],
    [0, 2, 1, 1],
    [0, 2, 0, 2],
    [0, 1, 4, 0],
    [0, 1, 3, 1],
    [0, 1, 2, 2],
    [0, 1, 1, 3],
    [0, 1, 0, 4],
    [0, 0, 6, 0],
    [0, 0, 5, 1],
    [0, 0, 4, 4],
    [0, 0, 3, 5],
    [0, 0, 2, 7],
    [0, 0, 1, 8],
    [0, 0, 0, 9],
];

#[test]
fn lex_ideal_of_the_witness() {
    let h = [1, 5, 11, 21, 30, 36, 41, 46, 49, 49];
    let (ideal, table) = almost_lex_ideal(5, &h).unwrap();
    let expected: Vec<Monomial> =
        LEX_GENERATORS.iter().map(|e| Monomial::new(vec![e[0], e[1], e[2], e[3], 0])).collect();
    assert_eq!(ideal.generators(), expected.as_slice());
    assert_eq!(table.quotient_totals(), vec![1, 22, 54, 47, 14]);
    let rows = [
        (1, [4, 6, 4, 1]),
        (3, [6, 14, 11, 3]),
        (4, [5, 14, 13, 4]),
        (5, [2, 5, 4, 1]),
        (7, [2, 6, 6, 2]),
        (8, [3, 9, 9, 3]),
    ];
    for (shift, row) in rows {
        assert_eq!(&table.quotient_row(shift)[1..], &row, "row {shift}");
    }
    for empty in [2, 6] {
        assert!(table.quotient_row(empty).iter().all(|&v| v == 0));
    }
    let report = ideal_command(5, &h).unwrap();
    assert_eq!(report.generators.len(), 22);
    assert_eq!(report.generator_strings[0], "x1^2");
    assert_eq!(report.generator_strings[21], "x4^9");
}

#[test]
fn forced_simplified_run() {
    let r = solve(Algorithm::Simplified, ResultsMode::One);
    assert_eq!(r.betti_upper_bound, vec![24, 57, 50, 15]);
    assert_eq!(r.maximum_betti_sum, 145);
    assert!(!r.is_realizable);
    let h = hf(&[1, 5, 11, 21, 30, 36, 41, 49, 49]);
    assert_eq!(r.hilbert_functions, Some(vec![h.clone()]));
    // Δh(7) = 8 cannot follow Δh(6) = 5
    assert_eq!(h[7] - h[6], 8);
    assert_eq!(lower(8, 7), 7);
    assert!(lower(8, 7) > h[6] - h[5]);
    assert!(almost_lex_ideal(5, &h).is_err());
}

#[test]
fn witness_display_trims_to_one_repeat() {
    let spec = worked_example();
    let mut tuple = vec![0u64; spec.horizon() + 1];
    tuple[..9].copy_from_slice(&[1, 4, 6, 10, 9, 6, 5, 5, 3]);
    assert_eq!(hilbert_values(&spec, &tuple).unwrap(), vec![1, 5, 11, 21, 30, 36, 41, 46, 49, 49]);
}
