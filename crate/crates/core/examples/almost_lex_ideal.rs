//! The saturated lexsegment-type ideal attached to a Hilbert function,
//! with its Betti table.

use maxbetti::almost_lex_ideal;

fn main() -> maxbetti::Result<()> {
    let h = [1, 5, 11, 21, 30, 36, 41, 46, 49, 49];
    let (ideal, table) = almost_lex_ideal(5, &h)?;
    println!("{} generators:", ideal.generators().len());
    for g in ideal.generators() {
        println!("  {g}");
    }
    print!("{}", table.render_quotient());
    Ok(())
}
