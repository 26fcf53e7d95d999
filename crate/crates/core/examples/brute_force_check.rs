//! Cross-check the dynamic program against exhaustive enumeration on a
//! small family, in every results mode and for both families.

use maxbetti::oracle::brute_force_result;
use maxbetti::{build_spec, finalize, run, Algorithm, BoundLists, HilbertPolynomial, ResultsMode};

fn main() -> maxbetti::Result<()> {
    let spec = build_spec(4, &BoundLists::default().hf_lower(2, 5), Some(&HilbertPolynomial::constant(7)))?;
    for algorithm in [Algorithm::Simplified, Algorithm::Complete] {
        for mode in [ResultsMode::None, ResultsMode::One, ResultsMode::AllMaxBettiSum, ResultsMode::All] {
            let dp = finalize(&run(&spec, algorithm, mode)?, &spec)?;
            let oracle = brute_force_result(&spec, algorithm.into(), mode)?;
            let verdict = if dp == oracle { "agree" } else { "DISAGREE" };
            println!("{algorithm:?} {mode:?}: {verdict}, bound {:?}", dp.betti_upper_bound);
        }
    }
    Ok(())
}
