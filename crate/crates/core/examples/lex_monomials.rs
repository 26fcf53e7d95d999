//! Ranking and unranking monomials in lex order, and the V tables built
//! from the lex-last monomials of one degree.

use maxbetti::monomials::{lex_last_monomial, v_table};
use num_bigint::BigUint;

fn main() -> maxbetti::Result<()> {
    let (n, d) = (3, 2);
    println!("degree-{d} monomials of K[x1..x{}], lex-smallest first:", n + 1);
    for k in 1..=10u32 {
        let m = lex_last_monomial(n, d, &BigUint::from(k))?;
        println!("  {k:>2}: {m:<8} max index {}", m.max_index()?);
    }
    let table = v_table(n, d, 10)?;
    println!("V_q[{d}, l] for l = 0..10 (columns q = 0..{n}):");
    for l in 0..=10 {
        println!("  {l:>2}: {:?}", table.row(l));
    }
    Ok(())
}
