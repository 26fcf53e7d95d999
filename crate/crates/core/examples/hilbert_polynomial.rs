//! Gotzmann decompositions, and the horizon they fix for a family.

use maxbetti::cli::parse_polynomial;
use maxbetti::macaulay::gotzmann_form;
use maxbetti::{build_spec, BoundLists};

fn main() -> maxbetti::Result<()> {
    for text in ["25", "1,1", "3,-6,175"] {
        let p = parse_polynomial(text)?;
        let form = gotzmann_form(&p)?;
        let runs: Vec<String> = form.runs().iter().map(|(a, m)| format!("{m} x a={a}")).collect();
        println!("p(d) = {p}: Gotzmann number {}, terms [{}]", form.len(), runs.join(", "));
        let spec = build_spec(6, &BoundLists::default(), Some(&p))?;
        println!("  horizon in 6 variables: {}", spec.horizon());
    }
    Ok(())
}
