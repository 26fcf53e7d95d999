//! Macaulay representations and the growth bounds they induce.
//!
//! `cargo run --example macaulay_bounds -- 49 6`

use maxbetti::{macaulay_lower_bound, macaulay_rep, macaulay_upper_bound};

fn main() -> maxbetti::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (a, d) = match args[..] {
        [a, d, ..] => (a, d as i64),
        _ => (8, 7),
    };
    let rep = macaulay_rep(a, d)?;
    println!("{a} in degree {d} = {rep}");
    println!("largest next value:      {}", macaulay_upper_bound(a, d)?);
    println!("smallest previous value: {}", macaulay_lower_bound(a, d)?);
    Ok(())
}
