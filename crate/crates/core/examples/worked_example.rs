//! Five variables, Hilbert polynomial 49, h(6) = 41 and lower bounds
//! 8, 8, 5, 5 on the first difference in degrees 3 to 6.

use maxbetti::{build_spec, finalize, solve, AlgorithmChoice, BoundLists, HilbertPolynomial, ResultsMode};

fn main() -> maxbetti::Result<()> {
    let bounds =
        BoundLists::default().fix_hf(6, 41).diff_lower(3, 8).diff_lower(4, 8).diff_lower(5, 5).diff_lower(6, 5);
    let spec = build_spec(5, &bounds, Some(&HilbertPolynomial::constant(49)))?;
    let raw = solve(&spec, AlgorithmChoice::Automatic, ResultsMode::All)?;
    let result = finalize(&raw, &spec)?;
    println!("algorithm:   {:?}", result.algorithm);
    println!("upper bound: {:?}", result.betti_upper_bound);
    println!("max sum:     {}", result.maximum_betti_sum);
    println!("realizable:  {}", result.is_realizable);
    for v in result.maximal_betti_numbers.unwrap_or_default() {
        println!("maximal:     {v:?}");
    }
    println!("{} Hilbert functions reach a maximal vector", result.hilbert_functions.map_or(0, |h| h.len()));
    Ok(())
}
